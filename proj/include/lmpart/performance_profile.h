/*******************************************************************************
 * Performance profiles over edge cuts.
 *
 * P_A(tau) is the fraction of instances on which algorithm A's cut is at most
 * tau times the best cut of any algorithm on that instance.
 *
 * Instances whose best cut is zero only take part if every algorithm reached
 * zero (all count as ratio 1); otherwise they are excluded with a warning.
 *
 * @file:   performance_profile.h
 ******************************************************************************/
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lmpart/definitions.h"

namespace lmpart {
struct CutRecord {
  std::string algorithm;
  std::string instance;
  EdgeWeight cut = 0;
};

struct ProfileBreakpoint {
  double tau = 1.0;
  double fraction = 0.0;
};

struct ProfileCurve {
  std::string algorithm;
  // Sorted by tau; the curve is a right-continuous step function.
  std::vector<ProfileBreakpoint> breakpoints;

  [[nodiscard]] double fraction_at(double tau) const;
};

struct ProfileTable {
  std::vector<std::string> algorithms;
  std::vector<std::string> instances;
  // cuts[a][i] for algorithms[a] on instances[i]
  std::vector<std::vector<EdgeWeight>> cuts;
  std::vector<ProfileCurve> curves;
  std::vector<std::string> excluded_instances;
  std::vector<std::string> warnings;
};

// Parses "algorithm,instance,cut" rows after a header line.
[[nodiscard]] std::vector<CutRecord> parse_cut_csv(const std::string &contents);

// Throws std::invalid_argument on empty, duplicate or incomplete tables and on
// negative cuts.
[[nodiscard]] ProfileTable performance_profile(const std::vector<CutRecord> &records);

// One row per breakpoint: algorithm,tau,fraction.
void write_profile_csv(const ProfileTable &table, std::ostream &out);
[[nodiscard]] nlohmann::ordered_json to_json(const ProfileTable &table);
} // namespace lmpart

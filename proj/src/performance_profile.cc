/*******************************************************************************
 * Performance profiles.
 *
 * @file:   performance_profile.cc
 ******************************************************************************/
#include "lmpart/performance_profile.h"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lmpart {
double ProfileCurve::fraction_at(const double tau) const {
  double fraction = 0.0;
  for (const auto &point : breakpoints) {
    if (point.tau > tau) {
      break;
    }
    fraction = point.fraction;
  }
  return fraction;
}

std::vector<CutRecord> parse_cut_csv(const std::string &contents) {
  std::istringstream in(contents);
  std::string line;
  std::vector<CutRecord> records;

  const auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
  };

  std::size_t line_number = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_number;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) {
      fields.push_back(trim(field));
    }
    if (header) {
      if (fields != std::vector<std::string>{"algorithm", "instance", "cut"}) {
        throw std::invalid_argument("cut table must start with the header algorithm,instance,cut");
      }
      header = false;
      continue;
    }
    if (fields.size() != 3) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected three fields");
    }
    EdgeWeight value = 0;
    const auto [ptr, ec] =
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), value);
    if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) {
      throw std::invalid_argument("line " + std::to_string(line_number) + ": invalid cut value");
    }
    records.push_back({fields[0], fields[1], value});
  }
  return records;
}

ProfileTable performance_profile(const std::vector<CutRecord> &records) {
  if (records.empty()) {
    throw std::invalid_argument("performance profile needs at least one cut");
  }

  ProfileTable table;
  std::map<std::string, std::size_t> algorithm_index;
  std::map<std::string, std::size_t> instance_index;
  for (const auto &record : records) {
    if (record.cut < 0) {
      throw std::invalid_argument("negative cut for " + record.algorithm + " on " +
                                  record.instance);
    }
    if (algorithm_index.emplace(record.algorithm, table.algorithms.size()).second) {
      table.algorithms.push_back(record.algorithm);
    }
    if (instance_index.emplace(record.instance, table.instances.size()).second) {
      table.instances.push_back(record.instance);
    }
  }

  constexpr EdgeWeight kMissing = -1;
  table.cuts.assign(table.algorithms.size(), std::vector<EdgeWeight>(table.instances.size(), kMissing));
  for (const auto &record : records) {
    EdgeWeight &slot =
        table.cuts[algorithm_index[record.algorithm]][instance_index[record.instance]];
    if (slot != kMissing) {
      throw std::invalid_argument("duplicate cut for " + record.algorithm + " on " +
                                  record.instance);
    }
    slot = record.cut;
  }

  // ratios[a] collects cut / best over the included instances.
  std::vector<std::vector<double>> ratios(table.algorithms.size());
  std::size_t included = 0;
  for (std::size_t i = 0; i < table.instances.size(); ++i) {
    EdgeWeight best = std::numeric_limits<EdgeWeight>::max();
    EdgeWeight worst = 0;
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      const EdgeWeight value = table.cuts[a][i];
      if (value == kMissing) {
        throw std::invalid_argument("missing cut for " + table.algorithms[a] + " on " +
                                    table.instances[i]);
      }
      best = std::min(best, value);
      worst = std::max(worst, value);
    }

    if (best == 0 && worst > 0) {
      table.excluded_instances.push_back(table.instances[i]);
      table.warnings.push_back("instance " + table.instances[i] +
                               " excluded: best cut is zero but not all algorithms reached it");
      continue;
    }
    ++included;
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      ratios[a].push_back(best == 0 ? 1.0
                                    : static_cast<double>(table.cuts[a][i]) /
                                          static_cast<double>(best));
    }
  }

  if (included == 0) {
    throw std::invalid_argument("no instance has a well-defined best cut");
  }

  for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
    auto &values = ratios[a];
    std::sort(values.begin(), values.end());
    ProfileCurve curve{.algorithm = table.algorithms[a], .breakpoints = {}};
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j + 1 < values.size() && values[j + 1] == values[j]) {
        continue;
      }
      curve.breakpoints.push_back(
          {.tau = values[j], .fraction = static_cast<double>(j + 1) / included});
    }
    table.curves.push_back(std::move(curve));
  }
  return table;
}

void write_profile_csv(const ProfileTable &table, std::ostream &out) {
  out << "algorithm,tau,fraction\n";
  const auto flags = out.flags();
  out << std::setprecision(17);
  for (const auto &curve : table.curves) {
    for (const auto &point : curve.breakpoints) {
      out << curve.algorithm << ',' << point.tau << ',' << point.fraction << '\n';
    }
  }
  out.flags(flags);
}

nlohmann::ordered_json to_json(const ProfileTable &table) {
  nlohmann::ordered_json doc;
  doc["algorithms"] = table.algorithms;
  doc["instances"] = table.instances;
  doc["excluded_instances"] = table.excluded_instances;
  nlohmann::ordered_json curves = nlohmann::ordered_json::array();
  for (const auto &curve : table.curves) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto &point : curve.breakpoints) {
      points.push_back({{"tau", point.tau}, {"fraction", point.fraction}});
    }
    curves.push_back({{"algorithm", curve.algorithm}, {"breakpoints", std::move(points)}});
  }
  doc["curves"] = std::move(curves);
  return doc;
}
} // namespace lmpart

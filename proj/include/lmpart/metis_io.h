/*******************************************************************************
 * Reader and writer for the METIS graph format.
 *
 * Header: "n m [fmt [ncon]]". The last digit of fmt enables edge weights, the
 * second to last enables node weights. Node ids are 1-based in the file.
 * Lines starting with '%' are comments.
 *
 * @file:   metis_io.h
 ******************************************************************************/
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lmpart/graph.h"

namespace lmpart {
class IOError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] Graph parse_metis(std::string_view contents);
[[nodiscard]] Graph read_metis(const std::filesystem::path &path);

[[nodiscard]] std::string format_metis(const Graph &graph);
void write_metis(const Graph &graph, std::ostream &out);
void write_metis(const Graph &graph, const std::filesystem::path &path);
} // namespace lmpart

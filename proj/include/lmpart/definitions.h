/*******************************************************************************
 * Basic type definitions shared by all modules.
 *
 * @file:   definitions.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>

namespace lmpart {
using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using ClusterID = NodeID;
using BlockID = std::uint32_t;
using NodeWeight = std::int64_t;
using EdgeWeight = std::int64_t;

constexpr NodeID kInvalidNodeID = std::numeric_limits<NodeID>::max();
constexpr BlockID kInvalidBlockID = std::numeric_limits<BlockID>::max();
} // namespace lmpart

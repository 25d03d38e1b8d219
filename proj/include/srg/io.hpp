#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srg/grid.hpp"
#include "srg/growers.hpp"

namespace srg {

/// PGM (P2 ascii or P5 raw, maxval <= 65535); pixel 0 is outside the domain,
/// anything else inside. Returns a [height, width] domain so the flat mask
/// order matches the raster order. Parse errors report the byte offset.
GridDomain read_mask_2d(std::string_view bytes);

/// P2 serialization of a 2D domain (maxval 1). Used for fixtures and for
/// archiving generated instances.
std::string write_mask_2d(const GridDomain& domain);

/// 3D volume: a JSON header {"dims":[nx,ny,nz],"raw":"<file>"} plus a raw
/// body of nx*ny*nz bytes with x fastest. Yields a [nz,ny,nx] domain so the
/// body order again matches the flat mask order; points are (z,y,x).
GridDomain read_mask_3d(std::string_view header_bytes, std::span<const std::uint8_t> body);

/// {"seeds":[{"id":"a","points":[[r,c],...]},...]}; file order is the
/// initialisation order. Validates ids, arity, membership and disjointness.
SeedList read_seeds(std::string_view bytes, const GridDomain& domain);

std::string write_seeds(const SeedList& seeds);

/// Parsed form of a label-map file (see README for the exact grammar).
/// Values: 0 UNLABELED, 1 BOUNDARY, 2.. seed regions in legend order; the
/// BOUNDARY entry is present only for modes that grow one.
struct LabelFile {
  std::vector<Coord> dims;
  std::map<std::int32_t, std::string> legend;  // value -> UNLABELED | BOUNDARY | seed:<id>
  std::vector<std::int32_t> values;
};

std::string write_labels(const GrowResult& result);
LabelFile read_labels(std::string_view bytes);

/// Replays the trace and serializes one label-map file per `every` growth
/// steps; a final frame is always included (not duplicated when the last
/// periodic frame already shows the final state).
std::vector<std::string> write_trace_frames(const GrowResult& result,
                                            std::span<const TraceEvent> trace,
                                            std::uint64_t every);

/// The srgrow command line; returns the process exit code.
int cli_run(const std::vector<std::string>& args);

}  // namespace srg

#include "srg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace srg {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& what, std::size_t offset) {
  throw std::runtime_error(what + " at byte " + std::to_string(offset));
}

// Whitespace/comment-skipping token scanner for PNM headers.
struct PnmScanner {
  std::string_view data;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < data.size()) {
      char c = data[pos];
      if (c == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        ++pos;
      } else {
        break;
      }
    }
  }

  unsigned long next_uint(const std::string& what) {
    skip_space_and_comments();
    if (pos >= data.size()) fail_at("unexpected end of header, missing " + what, pos);
    if (data[pos] < '0' || data[pos] > '9') fail_at("malformed " + what, pos);
    unsigned long value = 0;
    while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
      value = value * 10 + static_cast<unsigned long>(data[pos] - '0');
      if (value > 1000000000ul) fail_at(what + " out of range", pos);
      ++pos;
    }
    return value;
  }
};

}  // namespace

GridDomain read_mask_2d(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    fail_at("not a P2/P5 PGM file", 0);
  const bool ascii = bytes[1] == '2';
  PnmScanner sc{bytes, 2};
  unsigned long width = sc.next_uint("width");
  unsigned long height = sc.next_uint("height");
  unsigned long maxval = sc.next_uint("maxval");
  if (width == 0 || height == 0) fail_at("zero image dimension", sc.pos);
  if (maxval == 0 || maxval > 65535) fail_at("maxval out of range", sc.pos);

  std::vector<std::uint8_t> mask;
  mask.reserve(width * height);
  if (ascii) {
    for (unsigned long i = 0; i < width * height; ++i) {
      unsigned long v = sc.next_uint("pixel");
      if (v > maxval) fail_at("pixel exceeds maxval", sc.pos);
      mask.push_back(v != 0);
    }
    sc.skip_space_and_comments();
    if (sc.pos != bytes.size()) fail_at("trailing data", sc.pos);
  } else {
    if (sc.pos >= bytes.size()) fail_at("missing raster", sc.pos);
    char sep = bytes[sc.pos];
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') fail_at("malformed raster separator", sc.pos);
    ++sc.pos;
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    const std::size_t need = width * height * bpp;
    if (bytes.size() - sc.pos < need) fail_at("truncated raster", bytes.size());
    for (unsigned long i = 0; i < width * height; ++i) {
      unsigned long v = static_cast<unsigned char>(bytes[sc.pos]);
      if (bpp == 2) v = v * 256 + static_cast<unsigned char>(bytes[sc.pos + 1]);
      sc.pos += bpp;
      mask.push_back(v != 0);
    }
    // Tolerate trailing whitespace some writers append.
    while (sc.pos < bytes.size()) {
      char c = bytes[sc.pos];
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') fail_at("trailing data", sc.pos);
      ++sc.pos;
    }
  }
  return GridDomain({static_cast<Coord>(height), static_cast<Coord>(width)}, std::move(mask));
}

std::string write_mask_2d(const GridDomain& domain) {
  if (domain.dim() != 2) throw std::invalid_argument("write_mask_2d needs a 2D domain");
  const Coord rows = domain.dims()[0];
  const Coord cols = domain.dims()[1];
  std::string out = "P2\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n1\n";
  for (Coord r = 0; r < rows; ++r) {
    for (Coord c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += domain.contains(Point{r, c}) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

GridDomain read_mask_3d(std::string_view header_bytes, std::span<const std::uint8_t> body) {
  json header;
  try {
    header = json::parse(header_bytes);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed 3D header: ") + e.what());
  }
  if (!header.contains("dims") || !header["dims"].is_array() || header["dims"].size() != 3)
    throw std::runtime_error("3D header must carry dims [nx,ny,nz]");
  std::vector<Coord> file_dims;
  for (const auto& d : header["dims"]) {
    if (!d.is_number_integer() || d.get<std::int64_t>() <= 0 || d.get<std::int64_t>() > 1 << 20)
      throw std::runtime_error("3D dims must be positive integers");
    file_dims.push_back(d.get<Coord>());
  }
  const std::size_t need = static_cast<std::size_t>(file_dims[0]) *
                           static_cast<std::size_t>(file_dims[1]) *
                           static_cast<std::size_t>(file_dims[2]);
  if (body.size() != need)
    throw std::runtime_error("3D body holds " + std::to_string(body.size()) +
                             " bytes, dims require " + std::to_string(need));
  // Body is x fastest; store dims reversed so the flat order is unchanged.
  std::vector<std::uint8_t> mask(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) mask[i] = body[i] != 0;
  return GridDomain({file_dims[2], file_dims[1], file_dims[0]}, std::move(mask));
}

SeedList read_seeds(std::string_view bytes, const GridDomain& domain) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed seed file: ") + e.what());
  }
  if (!doc.contains("seeds") || !doc["seeds"].is_array())
    throw std::runtime_error("seed file must carry a 'seeds' array");
  SeedList seeds;
  PointSet taken;
  for (const auto& entry : doc["seeds"]) {
    if (!entry.contains("id") || !entry["id"].is_string())
      throw std::runtime_error("seed entry without string id");
    Seed seed;
    seed.id = entry["id"].get<std::string>();
    if (seed.id.empty() || seed.id.find('\n') != std::string::npos)
      throw std::runtime_error("seed id must be nonempty and single-line");
    for (const Seed& prev : seeds)
      if (prev.id == seed.id) throw std::runtime_error("duplicate seed id '" + seed.id + "'");
    if (!entry.contains("points") || !entry["points"].is_array() || entry["points"].empty())
      throw std::runtime_error("seed '" + seed.id + "' needs a nonempty points array");
    for (const auto& pt : entry["points"]) {
      if (!pt.is_array() || pt.size() != static_cast<std::size_t>(domain.dim()))
        throw std::runtime_error("seed '" + seed.id + "' has a point of wrong arity (domain is " +
                                 std::to_string(domain.dim()) + "D)");
      std::vector<Coord> coords;
      for (const auto& c : pt) {
        if (!c.is_number_integer())
          throw std::runtime_error("seed '" + seed.id + "' has a non-integer coordinate");
        coords.push_back(c.get<Coord>());
      }
      Point p = Point::of(coords);
      if (!domain.contains(p))
        throw std::runtime_error("seed '" + seed.id + "' point " + p.to_string() +
                                 " is outside the domain");
      if (!taken.insert(p))
        throw std::runtime_error("seed '" + seed.id + "' point " + p.to_string() +
                                 " already belongs to another seed");
      seed.points.push_back(p);
    }
    seeds.push_back(std::move(seed));
  }
  return seeds;
}

std::string write_seeds(const SeedList& seeds) {
  json doc;
  doc["seeds"] = json::array();
  for (const Seed& seed : seeds) {
    json entry;
    entry["id"] = seed.id;
    entry["points"] = json::array();
    for (const Point& p : seed.points) {
      json pt = json::array();
      for (int i = 0; i < p.dim(); ++i) pt.push_back(p[i]);
      entry["points"].push_back(pt);
    }
    doc["seeds"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

namespace {

// File values: 0 UNLABELED, 1 BOUNDARY, 2.. seeds in seed_order. Run-local
// labels are remapped through the result's seed table.
std::map<std::int32_t, std::int32_t> file_value_of_label(const GrowResult& result) {
  std::map<std::string, std::int32_t> value_of_id;
  for (std::size_t i = 0; i < result.seed_order.size(); ++i)
    value_of_id[result.seed_order[i]] = static_cast<std::int32_t>(2 + i);
  std::map<std::int32_t, std::int32_t> remap;
  if (result.boundary_label.has_value()) remap[*result.boundary_label] = 1;
  for (const auto& [label, id] : result.seed_of_label) remap[label] = value_of_id.at(id);
  return remap;
}

std::string serialize_labels(const GrowResult& result, const std::vector<std::int32_t>& values) {
  const std::vector<Coord>& dims = result.labels.dims();
  std::string out = "labelmap 1\ndims";
  for (Coord d : dims) out += " " + std::to_string(d);
  out += "\nlegend 0 UNLABELED\n";
  if (result.boundary_label.has_value()) out += "legend 1 BOUNDARY\n";
  for (std::size_t i = 0; i < result.seed_order.size(); ++i)
    out += "legend " + std::to_string(2 + i) + " seed:" + result.seed_order[i] + "\n";
  out += "data\n";
  const std::size_t row = dims.empty() ? values.size() : static_cast<std::size_t>(dims.back());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(values[i]);
    out += ((i + 1) % row == 0) ? '\n' : ' ';
  }
  return out;
}

}  // namespace

std::string write_labels(const GrowResult& result) {
  std::map<std::int32_t, std::int32_t> remap = file_value_of_label(result);
  std::vector<std::int32_t> values = result.labels.values();
  for (std::int32_t& v : values) v = (v == kUnlabeled) ? 0 : remap.at(v);
  return serialize_labels(result, values);
}

LabelFile read_labels(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  std::string line;
  if (!std::getline(in, line) || line != "labelmap 1")
    throw std::runtime_error("missing 'labelmap 1' magic");
  if (!std::getline(in, line) || line.rfind("dims", 0) != 0)
    throw std::runtime_error("missing dims line");
  LabelFile file;
  {
    std::istringstream ls(line.substr(4));
    Coord d = 0;
    while (ls >> d) {
      if (d <= 0) throw std::runtime_error("dims must be positive");
      file.dims.push_back(d);
    }
    if (file.dims.empty()) throw std::runtime_error("dims line is empty");
  }
  while (std::getline(in, line) && line.rfind("legend ", 0) == 0) {
    std::size_t sp = line.find(' ', 7);
    if (sp == std::string::npos) throw std::runtime_error("malformed legend line");
    int value = std::stoi(line.substr(7, sp - 7));
    if (value < 0 || file.legend.count(value))
      throw std::runtime_error("legend value " + std::to_string(value) + " repeated or negative");
    file.legend[value] = line.substr(sp + 1);
  }
  if (line != "data") throw std::runtime_error("missing data section");
  std::size_t total = 1;
  for (Coord d : file.dims) total *= static_cast<std::size_t>(d);
  file.values.reserve(total);
  std::int64_t v = 0;
  while (in >> v) {
    if (v < 0 || !file.legend.count(static_cast<std::int32_t>(v)))
      throw std::runtime_error("body value " + std::to_string(v) + " missing from the legend");
    file.values.push_back(static_cast<std::int32_t>(v));
  }
  if (file.values.size() != total)
    throw std::runtime_error("body holds " + std::to_string(file.values.size()) +
                             " values, dims require " + std::to_string(total));
  return file;
}

std::vector<std::string> write_trace_frames(const GrowResult& result,
                                            std::span<const TraceEvent> trace,
                                            std::uint64_t every) {
  if (every == 0) throw std::invalid_argument("trace-every must be >= 1");
  std::map<std::int32_t, std::int32_t> remap = file_value_of_label(result);
  std::vector<std::int32_t> values(result.labels.values().size(), 0);

  std::vector<std::string> frames;
  std::uint64_t growths = 0;
  GridDomain shape = GridDomain::full(result.labels.dims());
  for (const TraceEvent& e : trace) {
    if (e.cause == TraceCause::kSkip) continue;
    values[shape.index_of(e.point)] = remap.at(e.label);
    ++growths;
    if (growths % every == 0) frames.push_back(serialize_labels(result, values));
  }
  if (growths % every != 0 || frames.empty()) frames.push_back(serialize_labels(result, values));
  return frames;
}

}  // namespace srg

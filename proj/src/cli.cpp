#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "srg/io.hpp"
#include "srg/oracle.hpp"
#include "srg/rng.hpp"

namespace srg {

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << bytes;
}

// PGM for 2D, JSON header next to a raw body for 3D; the magic decides.
GridDomain load_image(const fs::path& path) {
  std::string bytes = slurp(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
    return read_mask_2d(bytes);
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error(path.string() + " is neither a P2/P5 PGM nor a 3D JSON header");
  }
  if (!header.contains("raw") || !header["raw"].is_string())
    throw std::runtime_error(path.string() + ": 3D header needs a 'raw' body path");
  fs::path raw = path.parent_path() / header["raw"].get<std::string>();
  std::string body = slurp(raw);
  return read_mask_3d(bytes,
                      {reinterpret_cast<const std::uint8_t*>(body.data()), body.size()});
}

Neighborhood neighborhood_for(const GridDomain& domain, int kind) {
  return standard_neighborhood(domain.dim(), kind);
}

std::vector<std::size_t> parse_order(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::runtime_error("malformed --order entry '" + item + "'");
    order.push_back(v);
  }
  if (order.size() != n)
    throw std::runtime_error("--order must list all " + std::to_string(n) + " seed indices");
  return order;
}

PointSet domain_points(const GridDomain& domain) {
  PointSet out;
  for (std::size_t i = 0; i < domain.box_size(); ++i)
    if (domain.contains_index(i)) out.insert(domain.point_of(i));
  return out;
}

PointSet seed_points(const SeedList& seeds) {
  PointSet out;
  for (const Seed& s : seeds)
    for (const Point& p : s.points) out.insert(p);
  return out;
}

// Partition validation of a grow result against the seed-reachable set.
PartitionReport validate_result(GrowMode mode, const GridDomain& domain, const SeedList& seeds,
                                const Neighborhood& v, const GrowResult& result) {
  PointSet universe = reachable(domain, seed_points(seeds), v);
  std::vector<PointSet> blocks;
  PointSet boundary;
  for (const auto& [label, id] : result.seed_of_label) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < result.labels.values().size(); ++i)
      if (result.labels.values()[i] == label) pts.push_back(domain.point_of(i));
    blocks.emplace_back(std::move(pts));
  }
  if (result.boundary_label.has_value()) {
    for (std::size_t i = 0; i < result.labels.values().size(); ++i)
      if (result.labels.values()[i] == *result.boundary_label)
        boundary.insert(domain.point_of(i));
  }
  if (mode == GrowMode::kVBoundary)
    return is_v_boundary_partition(blocks, boundary, v, universe);
  // Simple and ambiguous modes must yield a simple partition; the ambiguous
  // boundary counts as one block.
  if (!boundary.empty()) blocks.push_back(boundary);
  return is_simple_partition(blocks, universe);
}

int cmd_segment(const std::string& mode_name, const fs::path& image, const fs::path& seeds_file,
                int kind, const std::optional<std::string>& order_text,
                const std::optional<std::uint64_t>& shuffle_seed, const fs::path& out,
                const std::optional<std::string>& trace_dir, std::uint64_t trace_every, bool check) {
  GridDomain domain = load_image(image);
  SeedList seeds = read_seeds(slurp(seeds_file), domain);
  Neighborhood v = neighborhood_for(domain, kind);

  GrowMode mode = mode_name == "simple"      ? GrowMode::kSimple
                  : mode_name == "vboundary" ? GrowMode::kVBoundary
                                             : GrowMode::kAmbiguous;

  std::vector<std::size_t> order(seeds.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (order_text.has_value()) order = parse_order(*order_text, seeds.size());
  if (shuffle_seed.has_value()) {
    Xorshift64Star rng(*shuffle_seed);
    shuffle(order, rng);
  }

  std::vector<TraceEvent> trace;
  GrowOptions options;
  if (trace_dir.has_value())
    options.trace = [&trace](const TraceEvent& e) { trace.push_back(e); };

  GrowResult result = run_with_order(mode, domain, seeds, v, order, options);
  spit(out, write_labels(result));

  if (trace_dir.has_value()) {
    fs::path dir(*trace_dir);
    fs::create_directories(dir);
    std::vector<std::string> frames = write_trace_frames(result, trace, trace_every);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%06zu.labels", i + 1);
      spit(dir / name, frames[i]);
    }
  }

  if (check) {
    PartitionReport report = validate_result(mode, domain, seeds, v, result);
    if (!report.ok()) {
      std::cerr << "partition check failed:\n" << report.to_string();
      return 1;
    }
    std::cout << "partition check: ok\n";
  }
  return 0;
}

int cmd_oracle(const fs::path& image, const fs::path& seeds_file, int kind, const fs::path& out) {
  GridDomain domain = load_image(image);
  SeedList seeds = read_seeds(slurp(seeds_file), domain);
  Neighborhood v = neighborhood_for(domain, kind);

  std::vector<PointSet> zones = influence_zones(domain, seeds, v);
  PointSet amb = ambiguous_set(domain, seeds, v);

  // Emit through the label-file writer: fabricate a result whose labelmap
  // holds zones as regions and the ambiguous set as the boundary.
  std::vector<std::int32_t> values(domain.box_size(), kUnlabeled);
  std::vector<TribeKind> policies{TribeKind::kPassive};
  std::vector<std::string> seed_order;
  std::map<std::int32_t, std::string> seed_of_label;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::int32_t label = static_cast<std::int32_t>(1 + i);
    policies.push_back(TribeKind::kActive);
    seed_of_label[label] = seeds[i].id;
    seed_order.push_back(seeds[i].id);
    for (const Point& p : zones[i]) values[domain.index_of(p)] = label;
  }
  for (const Point& p : amb) values[domain.index_of(p)] = 0;
  GrowResult fake{LabelMap(domain.dims(), std::move(values), std::move(policies)),
                  std::move(seed_order), std::move(seed_of_label), 0, {}};
  spit(out, write_labels(fake));
  return 0;
}

int cmd_check(const fs::path& labels_path, const fs::path& image, int kind,
              const std::string& partition) {
  GridDomain domain = load_image(image);
  LabelFile file = read_labels(slurp(labels_path));
  if (file.dims != domain.dims())
    throw std::runtime_error("label file dims do not match the image");
  Neighborhood v = neighborhood_for(domain, kind);

  GridDomain shape = GridDomain::full(file.dims);
  std::vector<PointSet> blocks;
  PointSet boundary;
  for (const auto& [value, tag] : file.legend) {
    if (tag == "UNLABELED") continue;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < file.values.size(); ++i)
      if (file.values[i] == value) pts.push_back(shape.point_of(i));
    if (tag == "BOUNDARY")
      boundary = PointSet(std::move(pts));
    else
      blocks.emplace_back(std::move(pts));
  }
  // Without seeds the universe is the whole domain; unlabeled reachable
  // points therefore count as cover gaps (see README).
  PointSet universe = domain_points(domain);
  PartitionReport report;
  if (partition == "vboundary") {
    report = is_v_boundary_partition(blocks, boundary, v, universe);
  } else {
    if (!boundary.empty()) blocks.push_back(boundary);
    report = is_simple_partition(blocks, universe);
  }
  std::cout << report.to_string();
  return report.ok() ? 0 : 1;
}

int cmd_diff(const fs::path& a_path, const fs::path& b_path) {
  LabelFile a = read_labels(slurp(a_path));
  LabelFile b = read_labels(slurp(b_path));
  if (a.dims != b.dims) throw std::runtime_error("label files have different dims");
  GridDomain shape = GridDomain::full(a.dims);
  std::vector<Point> differing;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.legend.at(a.values[i]) != b.legend.at(b.values[i]))
      differing.push_back(shape.point_of(i));
  }
  std::cout << "differing points: " << differing.size() << "\n";
  for (const Point& p : differing) std::cout << p.to_string() << "\n";
  return differing.empty() ? 0 : 1;
}

int cmd_invariance(const fs::path& image, const fs::path& seeds_file, int kind, std::uint64_t orders,
                   std::uint64_t rng_seed) {
  GridDomain domain = load_image(image);
  SeedList seeds = read_seeds(slurp(seeds_file), domain);
  Neighborhood v = neighborhood_for(domain, kind);

  std::vector<std::size_t> identity(seeds.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  LabelMap reference = canonical_relabel(run_with_order(GrowMode::kAmbiguous, domain, seeds, v, identity));

  Xorshift64Star rng(rng_seed);
  for (std::uint64_t k = 0; k < orders; ++k) {
    std::vector<std::size_t> order = random_permutation(seeds.size(), rng);
    LabelMap map = canonical_relabel(run_with_order(GrowMode::kAmbiguous, domain, seeds, v, order));
    if (!(map == reference)) {
      std::size_t differing = 0;
      for (std::size_t i = 0; i < map.values().size(); ++i)
        differing += map.values()[i] != reference.values()[i];
      std::string order_text;
      for (std::size_t i : order) order_text += (order_text.empty() ? "" : ",") + std::to_string(i);
      std::cout << "order " << order_text << " differs from identity on " << differing
                << " points\n";
      return 1;
    }
  }
  std::cout << "invariant over " << orders << " random orders\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
  CLI::App app{"Seeded region growing on binary masks: three growing processes, a geodesic "
               "oracle, and partition validators"};
  app.require_subcommand(1);

  // segment
  auto* segment = app.add_subcommand("segment", "run a growing process on an image");
  std::string mode;
  std::string image, seeds_file, out;
  int kind = 0;
  std::optional<std::string> order_text;
  std::optional<std::uint64_t> shuffle_seed;
  std::optional<std::string> trace_dir;
  std::uint64_t trace_every = 1;
  bool check = false;
  segment->add_option("--mode", mode)->required()->check(CLI::IsMember({"simple", "vboundary", "ambiguous"}));
  segment->add_option("--image", image)->required();
  segment->add_option("--seeds", seeds_file)->required();
  segment->add_option("--neighborhood", kind)->required()->check(CLI::IsMember({4, 8, 6, 26}));
  auto* order_opt = segment->add_option("--order", order_text, "seed order as comma-separated indices");
  segment->add_option("--shuffle", shuffle_seed, "shuffle the seed order with this RNG seed")
      ->excludes(order_opt);
  segment->add_option("--trace", trace_dir, "dump label-map frames into this directory");
  segment->add_option("--trace-every", trace_every)->check(CLI::PositiveNumber);
  segment->add_flag("--check", check, "validate the partition axioms before exiting");
  segment->add_option("-o,--out", out)->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "emit influence zones and the ambiguous set");
  std::string o_image, o_seeds, o_out;
  int o_kind = 0;
  oracle_cmd->add_option("--image", o_image)->required();
  oracle_cmd->add_option("--seeds", o_seeds)->required();
  oracle_cmd->add_option("--neighborhood", o_kind)->required()->check(CLI::IsMember({4, 8, 6, 26}));
  oracle_cmd->add_option("-o,--out", o_out)->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "validate a label file against partition axioms");
  std::string c_labels, c_image;
  int c_kind = 0;
  std::string c_partition;
  check_cmd->add_option("--labels", c_labels)->required();
  check_cmd->add_option("--image", c_image)->required();
  check_cmd->add_option("--neighborhood", c_kind)->required()->check(CLI::IsMember({4, 8, 6, 26}));
  check_cmd->add_option("--partition", c_partition)->required()->check(CLI::IsMember({"simple", "vboundary"}));

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "count points where two label files disagree");
  std::string d_a, d_b;
  diff_cmd->add_option("--a", d_a)->required();
  diff_cmd->add_option("--b", d_b)->required();

  // invariance
  auto* inv_cmd = app.add_subcommand("invariance", "probe seed-order invariance of the ambiguous grower");
  std::string i_image, i_seeds;
  int i_kind = 0;
  std::uint64_t i_orders = 10, i_rng_seed = 1;
  inv_cmd->add_option("--image", i_image)->required();
  inv_cmd->add_option("--seeds", i_seeds)->required();
  inv_cmd->add_option("--neighborhood", i_kind)->required()->check(CLI::IsMember({4, 8, 6, 26}));
  inv_cmd->add_option("--orders", i_orders)->check(CLI::PositiveNumber);
  inv_cmd->add_option("--rng-seed", i_rng_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (segment->parsed())
      return cmd_segment(mode, image, seeds_file, kind, order_text, shuffle_seed, out, trace_dir,
                         trace_every, check);
    if (oracle_cmd->parsed()) return cmd_oracle(o_image, o_seeds, o_kind, o_out);
    if (check_cmd->parsed()) return cmd_check(c_labels, c_image, c_kind, c_partition);
    if (diff_cmd->parsed()) return cmd_diff(d_a, d_b);
    if (inv_cmd->parsed()) return cmd_invariance(i_image, i_seeds, i_kind, i_orders, i_rng_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace srg

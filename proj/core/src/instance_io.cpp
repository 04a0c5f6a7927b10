#include "nsky/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nsky {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json meta_to_json(const InstanceMeta& m) {
  ordered_json j;
  j["family"] = m.family;
  j["seed"] = m.seed;
  j["general_position"] = m.general_position;
  if (m.skyline) j["skyline"] = *m.skyline;
  if (m.reduction) {
    const ReductionMeta& r = *m.reduction;
    j["reduction"] = ordered_json{{"k", r.k},
                                  {"l", r.l},
                                  {"marker_ids", r.marker_ids},
                                  {"truth", r.truth},
                                  {"collision_free", r.collision_free}};
  }
  return j;
}

InstanceMeta meta_from_json(const ordered_json& j) {
  InstanceMeta m;
  m.family = j.value("family", std::string{});
  m.seed = j.value("seed", std::uint64_t{0});
  m.general_position = j.value("general_position", false);
  if (j.contains("skyline")) {
    m.skyline = j.at("skyline").get<std::vector<PointId>>();
  }
  if (j.contains("reduction")) {
    const auto& rj = j.at("reduction");
    ReductionMeta r;
    r.k = rj.at("k").get<std::uint32_t>();
    r.l = rj.at("l").get<std::uint32_t>();
    r.marker_ids = rj.at("marker_ids").get<std::vector<PointId>>();
    r.truth = rj.at("truth").get<std::vector<int>>();
    r.collision_free = rj.at("collision_free").get<bool>();
    m.reduction = std::move(r);
  }
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

}  // namespace

std::string instance_to_json(const Instance& x) {
  ordered_json j;
  j["n"] = x.size();
  j["d"] = x.dim();
  ordered_json pts = ordered_json::array();
  for (const Point& p : x.points()) {
    pts.push_back(ordered_json{{"id", p.id}, {"coords", p.coords}});
  }
  j["points"] = std::move(pts);
  j["meta"] = x.meta() ? meta_to_json(*x.meta()) : ordered_json::object();
  return j.dump(2);
}

Instance instance_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  const auto n = j.at("n").get<std::size_t>();
  const auto d = j.at("d").get<std::uint32_t>();
  std::vector<Point> points;
  points.reserve(n);
  for (const auto& pj : j.at("points")) {
    Point p;
    p.id = pj.at("id").get<PointId>();
    p.coords = pj.at("coords").get<std::vector<double>>();
    points.push_back(std::move(p));
  }
  if (points.size() != n) throw std::invalid_argument("instance JSON: n != |points|");
  std::optional<InstanceMeta> meta;
  if (j.contains("meta") && !j.at("meta").empty()) meta = meta_from_json(j.at("meta"));
  Instance x(d, std::move(points), std::move(meta));
  x.validate();
  return x;
}

void write_instance(const std::string& path, const Instance& x) {
  spit(path, instance_to_json(x));
}

Instance read_instance(const std::string& path) {
  return instance_from_json(slurp(path));
}

std::string null_vectors_to_json(const NullVectorsInput& s) {
  ordered_json j;
  j["k"] = s.k;
  j["l"] = s.l;
  j["nonzero_positions"] = s.nonzero_pos;
  return j.dump(2);
}

NullVectorsInput null_vectors_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  NullVectorsInput s;
  s.k = j.at("k").get<std::uint32_t>();
  s.l = j.at("l").get<std::uint32_t>();
  s.nonzero_pos = j.at("nonzero_positions").get<std::vector<std::int32_t>>();
  if (s.nonzero_pos.size() != s.k) {
    throw std::invalid_argument("null vectors JSON: k != |nonzero_positions|");
  }
  return s;
}

void write_null_vectors(const std::string& path, const NullVectorsInput& s) {
  spit(path, null_vectors_to_json(s));
}

NullVectorsInput read_null_vectors(const std::string& path) {
  return null_vectors_from_json(slurp(path));
}

}  // namespace nsky

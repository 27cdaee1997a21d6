#include "fcit/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fcit {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(where + ": expected a number");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& require(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

double require_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw ParseError(where + ": field \"" + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

ProblemDef parse_problem(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

  ProblemDef p;
  p.name = doc.value("name", origin);
  const json& jdim = require(doc, "dimension", origin);
  if (!jdim.is_number_integer()) throw ParseError(origin + ": \"dimension\" must be an integer");
  const int dim = jdim.get<int>();

  const json& jb = require(doc, "bounds", origin);
  p.bounds.lower = number_array(require(jb, "lower", origin + ".bounds"), origin + ".bounds.lower");
  p.bounds.upper = number_array(require(jb, "upper", origin + ".bounds"), origin + ".bounds.upper");

  const json& jr = require(doc, "robot", origin);
  const json& jkind = require(jr, "kind", origin + ".robot");
  if (!jkind.is_string()) throw ParseError(origin + ".robot.kind: expected a string");
  const std::string kind = jkind.get<std::string>();
  if (kind == "point") {
    p.robot = PointRobot{dim};
  } else if (kind == "planar_arm") {
    PlanarArm arm;
    arm.link_lengths = number_array(require(jr, "link_lengths", origin + ".robot"),
                                    origin + ".robot.link_lengths");
    arm.link_radius = require_number(jr, "link_radius", origin + ".robot");
    if (jr.contains("base")) {
      const auto base = number_array(jr["base"], origin + ".robot.base");
      if (base.size() != 2) throw ParseError(origin + ".robot.base: expected 2 coordinates");
      arm.base = {base[0], base[1]};
    }
    p.robot = arm;
  } else {
    throw ParseError(origin + ".robot.kind: unknown kind \"" + kind + "\"");
  }
  if (config_dim(p.robot) != dim) {
    throw SemanticError(origin + ": robot configuration dimension " +
                        std::to_string(config_dim(p.robot)) + " does not match \"dimension\" " +
                        std::to_string(dim));
  }

  if (doc.contains("obstacles")) {
    const json& jobs = doc["obstacles"];
    if (!jobs.is_array()) throw ParseError(origin + ".obstacles: expected an array");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const std::string where = origin + ".obstacles[" + std::to_string(i) + "]";
      const json& jo = jobs[i];
      const json& jtype = require(jo, "type", where);
      if (!jtype.is_string()) throw ParseError(where + ".type: expected a string");
      const std::string type = jtype.get<std::string>();
      if (type == "sphere") {
        Sphere s;
        s.center = number_array(require(jo, "center", where), where + ".center");
        s.radius = require_number(jo, "radius", where);
        p.env.obstacles.emplace_back(std::move(s));
      } else if (type == "box") {
        AxisAlignedBox b;
        b.lo = number_array(require(jo, "min", where), where + ".min");
        b.hi = number_array(require(jo, "max", where), where + ".max");
        p.env.obstacles.emplace_back(std::move(b));
      } else if (type == "capsule") {
        Capsule c;
        c.a = number_array(require(jo, "a", where), where + ".a");
        c.b = number_array(require(jo, "b", where), where + ".b");
        c.radius = require_number(jo, "radius", where);
        p.env.obstacles.emplace_back(std::move(c));
      } else {
        throw ParseError(where + ".type: unknown type \"" + type + "\"");
      }
    }
  }

  p.start = Config(number_array(require(doc, "start", origin), origin + ".start"));
  const json& jg = require(doc, "goals", origin);
  if (!jg.is_array() || jg.empty()) throw ParseError(origin + ".goals: expected a non-empty array");
  for (std::size_t i = 0; i < jg.size(); ++i) {
    p.goals.emplace_back(number_array(jg[i], origin + ".goals[" + std::to_string(i) + "]"));
  }

  p.validate();  // throws SemanticError naming the offending field
  return p;
}

ProblemDef load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open problem file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.string());
}

std::string problem_to_json(const ProblemDef& problem) {
  json doc;
  doc["name"] = problem.name;
  doc["dimension"] = config_dim(problem.robot);
  doc["bounds"] = {{"lower", problem.bounds.lower}, {"upper", problem.bounds.upper}};
  if (const auto* arm = std::get_if<PlanarArm>(&problem.robot)) {
    doc["robot"] = {{"kind", "planar_arm"},
                    {"link_lengths", arm->link_lengths},
                    {"link_radius", arm->link_radius},
                    {"base", std::vector<double>{arm->base[0], arm->base[1]}}};
  } else {
    doc["robot"] = {{"kind", "point"}};
  }
  doc["obstacles"] = json::array();
  for (const Obstacle& obs : problem.env.obstacles) {
    if (const auto* s = std::get_if<Sphere>(&obs)) {
      doc["obstacles"].push_back({{"type", "sphere"}, {"center", s->center}, {"radius", s->radius}});
    } else if (const auto* b = std::get_if<AxisAlignedBox>(&obs)) {
      doc["obstacles"].push_back({{"type", "box"}, {"min", b->lo}, {"max", b->hi}});
    } else if (const auto* c = std::get_if<Capsule>(&obs)) {
      doc["obstacles"].push_back(
          {{"type", "capsule"}, {"a", c->a}, {"b", c->b}, {"radius", c->radius}});
    }
  }
  doc["start"] = problem.start.coords;
  doc["goals"] = json::array();
  for (const Config& g : problem.goals) {
    doc["goals"].push_back(g.coords);
  }
  return doc.dump(2) + "\n";
}

void save_problem(const ProblemDef& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write problem file: " + path.string());
  out << problem_to_json(problem);
  if (!out) throw IoError("failed writing problem file: " + path.string());
}

}  // namespace fcit

#include "dmlpg/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmlpg {

SubdomainShape parse_shape(const std::string& name)
{
    if (name == "box" || name == "square" || name == "cube") return SubdomainShape::box;
    if (name == "ball" || name == "disk" || name == "circle" || name == "sphere") return SubdomainShape::ball;
    throw Error("unknown subdomain shape '" + name + "'");
}

std::string to_string(SubdomainShape shape)
{
    return shape == SubdomainShape::box ? "box" : "ball";
}

namespace {

// Value errors; rethrown as ConfigError with location.
struct BadValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double to_double(const std::string& s)
{
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw BadValue("expected a number, got '" + s + "'");
    return v;
}

long to_long(const std::string& s)
{
    long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw BadValue("expected an integer, got '" + s + "'");
    return v;
}

double positive(const std::string& s)
{
    const double v = to_double(s);
    if (!(v > 0)) throw BadValue("must be positive, got '" + s + "'");
    return v;
}

int positive_int(const std::string& s)
{
    const long v = to_long(s);
    if (v <= 0) throw BadValue("must be a positive integer, got '" + s + "'");
    return static_cast<int>(v);
}

bool to_bool(const std::string& s)
{
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw BadValue("expected true or false, got '" + s + "'");
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s, std::size_t& offset)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        offset = s.size();
        return {};
    }
    const std::size_t e = s.find_last_not_of(" \t\r");
    offset = b;
    return s.substr(b, e - b + 1);
}

template <class F>
auto wrap(F&& f)
{
    return [f](const std::string& v) {
        try {
            return f(v);
        } catch (const BadValue&) {
            throw;
        } catch (const std::exception& e) {
            throw BadValue(e.what());
        }
    };
}

struct Field {
    std::string name;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define DMLPG_REAL(key, expr)                                                                  \
    Field{key, [](RunConfig& c, const std::string& v) { c.expr = positive(v); },               \
          [](const RunConfig& c) { return num(c.expr); }}
#define DMLPG_INT(key, expr)                                                                   \
    Field{key, [](RunConfig& c, const std::string& v) { c.expr = positive_int(v); },           \
          [](const RunConfig& c) { return std::to_string(c.expr); }}
#define DMLPG_BOOL(key, expr)                                                                  \
    Field{key, [](RunConfig& c, const std::string& v) { c.expr = to_bool(v); },                \
          [](const RunConfig& c) { return std::string(c.expr ? "true" : "false"); }}

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = {
        Field{"problem",
              [](RunConfig& c, const std::string& v) {
                  if (v.empty()) throw BadValue("must not be empty");
                  c.problem.kind = wrap([](const std::string& s) { return parse_problem(s); })(v);
              },
              [](const RunConfig& c) { return to_string(c.problem.kind); }},
        Field{"method",
              [](RunConfig& c, const std::string& v) {
                  c.assembly.method = wrap([](const std::string& s) { return parse_method(s); })(v);
              },
              [](const RunConfig& c) { return to_string(c.assembly.method); }},
        Field{"compare_method",
              [](RunConfig& c, const std::string& v) {
                  c.compare_method = wrap([](const std::string& s) { return parse_method(s); })(v);
              },
              [](const RunConfig& c) { return to_string(c.compare_method); }},
        DMLPG_INT("m", problem.degree),
        DMLPG_REAL("epsilon", assembly.gmls.epsilon),
        DMLPG_REAL("max_condition", assembly.gmls.max_condition),
        Field{"shape",
              [](RunConfig& c, const std::string& v) {
                  c.problem.shape = wrap([](const std::string& s) { return parse_shape(s); })(v);
              },
              [](const RunConfig& c) { return to_string(c.problem.shape); }},
        DMLPG_REAL("box_factor", problem.box_factor),
        DMLPG_REAL("ball_factor", problem.ball_factor),
        DMLPG_REAL("curved_factor", problem.curved_factor),
        DMLPG_REAL("delta_factor", problem.delta_factor),
        DMLPG_REAL("delta_factor_near", problem.delta_factor_near),
        DMLPG_REAL("delta_factor_far", problem.delta_factor_far),
        Field{"quadrature",
              [](RunConfig& c, const std::string& v) {
                  c.assembly.quadrature.box = v == "auto" ? 0 : positive_int(v);
              },
              [](const RunConfig& c) {
                  return c.assembly.quadrature.box == 0 ? std::string("auto")
                                                        : std::to_string(c.assembly.quadrature.box);
              }},
        DMLPG_INT("quadrature_curved", assembly.quadrature.curved),
        DMLPG_INT("quadrature_data", assembly.data_points),
        Field{"levels",
              [](RunConfig& c, const std::string& v) {
                  std::vector<int> levels;
                  std::stringstream ss(v);
                  std::string item;
                  while (std::getline(ss, item, ',')) {
                      std::size_t off = 0;
                      const std::string t = trim(item, off);
                      const long l = to_long(t);
                      if (l < 0 || l > 8) throw BadValue("level out of range [0, 8]: '" + t + "'");
                      levels.push_back(static_cast<int>(l));
                  }
                  if (levels.empty()) throw BadValue("needs at least one level");
                  c.levels = levels;
              },
              [](const RunConfig& c) {
                  std::string s;
                  for (std::size_t i = 0; i < c.levels.size(); ++i)
                      s += (i ? "," : "") + std::to_string(c.levels[i]);
                  return s;
              }},
        DMLPG_REAL("E", problem.E),
        Field{"nu",
              [](RunConfig& c, const std::string& v) {
                  const double nu = positive(v);
                  if (nu >= 0.5) throw BadValue("must lie in (0, 0.5), got '" + v + "'");
                  c.problem.nu = nu;
              },
              [](const RunConfig& c) { return num(c.problem.nu); }},
        Field{"mode",
              [](RunConfig& c, const std::string& v) {
                  c.problem.mode = wrap([](const std::string& s) { return parse_elastic_mode(s); })(v);
              },
              [](const RunConfig& c) { return to_string(c.problem.mode); }},
        DMLPG_REAL("L", problem.L),
        DMLPG_REAL("D", problem.D),
        DMLPG_REAL("P", problem.P),
        DMLPG_INT("nx", problem.nx),
        DMLPG_INT("ny", problem.ny),
        DMLPG_REAL("a", problem.a),
        DMLPG_REAL("b", problem.b),
        DMLPG_REAL("sigma", problem.sigma),
        DMLPG_INT("nr", problem.nr),
        DMLPG_INT("ntheta", problem.ntheta),
        DMLPG_REAL("grading", problem.grading),
        DMLPG_REAL("sphere_radius", problem.sphere_radius),
        DMLPG_REAL("inner_radius", problem.inner_radius),
        DMLPG_INT("target", problem.target),
        DMLPG_INT("dim", problem.dim),
        DMLPG_INT("field_degree", problem.field_degree),
        DMLPG_INT("grid", problem.grid),
        Field{"output_dir",
              [](RunConfig& c, const std::string& v) {
                  if (v.empty()) throw BadValue("must not be empty");
                  c.output_dir = v;
              },
              [](const RunConfig& c) { return c.output_dir; }},
        DMLPG_BOOL("timings", timings),
        DMLPG_BOOL("dump", dump),
        DMLPG_BOOL("parallel", assembly.parallel),
        DMLPG_BOOL("cache", assembly.use_cache),
        DMLPG_BOOL("row_scaling", assembly.row_scaling),
    };
    return table;
}

#undef DMLPG_REAL
#undef DMLPG_INT
#undef DMLPG_BOOL

const Field* find_field(const std::string& key)
{
    for (const auto& f : fields())
        if (f.name == key) return &f;
    return nullptr;
}

[[noreturn]] void invalid(const std::string& key, const std::string& why)
{
    throw ConfigError("invalid value for '" + key + "': " + why, 0, 0, key);
}

// Cross-field checks and problem-dependent defaults.
void finalize(RunConfig& c, const std::set<std::string>& given)
{
    auto& p = c.problem;
    if (!given.count("problem")) throw ConfigError("missing required key 'problem'", 0, 0, "problem");
    if (p.degree > 4) invalid("m", "basis degree above 4 is not supported");
    if (p.kind == ProblemKind::manufactured && p.dim != 2 && p.dim != 3) invalid("dim", "must be 2 or 3");
    if (p.kind == ProblemKind::manufactured && p.field_degree > p.degree)
        invalid("field_degree", "exceeds the basis degree m");
    if (p.grading < 1.0) invalid("grading", "must be >= 1");
    if (p.kind == ProblemKind::plate && !(p.b > p.a)) invalid("b", "outer size must exceed the hole radius a");
    if (p.kind == ProblemKind::boussinesq && !(p.sphere_radius > p.inner_radius))
        invalid("sphere_radius", "must exceed inner_radius");
    if (p.nx < 2 || p.ny < 2) invalid(p.nx < 2 ? "nx" : "ny", "needs at least 2 nodes");
    if (p.nr < 2 || p.ntheta < 2) invalid(p.nr < 2 ? "nr" : "ntheta", "needs at least 2 nodes");
    if (p.grid < 2) invalid("grid", "needs at least 2 nodes per axis");

    const bool solid = p.kind == ProblemKind::boussinesq || (p.kind == ProblemKind::manufactured && p.dim == 3);
    if (!given.count("mode")) {
        p.mode = solid ? ElasticMode::solid : ElasticMode::plane_stress;
    } else if (solid != (p.mode == ElasticMode::solid)) {
        invalid("mode", solid ? "three-dimensional problems need 'solid'" : "two-dimensional problems need a plane mode");
    }
    if (!given.count("E")) p.E = p.kind == ProblemKind::boussinesq ? 1000.0 : 1.0;
    if (!given.count("delta_factor")) p.delta_factor = p.default_delta_factor();
    if (p.kind == ProblemKind::boussinesq && !given.count("shape")) p.shape = SubdomainShape::box;
    if (p.kind == ProblemKind::boussinesq && !given.count("target")) p.target = 1386;
    c.assembly.gmls.degree = p.degree;
    c.assembly.subdomains = p.subdomain_policy();
}

}  // namespace

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields()) k.push_back(f.name);
        return k;
    }();
    return keys;
}

RunConfig parse_config(const std::string& text)
{
    RunConfig c;
    std::set<std::string> given;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t off = 0;
        if (trim(line, off).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no,
                              static_cast<int>(off) + 1);
        std::size_t key_off = 0, val_off = 0;
        const std::string key = trim(line.substr(0, eq), key_off);
        const std::string value = trim(line.substr(eq + 1), val_off);
        const int key_col = static_cast<int>(key_off) + 1;
        const int val_col = static_cast<int>(eq + 1 + val_off) + 1;
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": missing key before '='", line_no, key_col);
        const Field* f = find_field(key);
        if (!f)
            throw ConfigError("line " + std::to_string(line_no) + ", column " + std::to_string(key_col) +
                                  ": unknown key '" + key + "'",
                              line_no, key_col, key);
        if (!given.insert(key).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no, key_col,
                              key);
        try {
            f->set(c, value);
        } catch (const BadValue& e) {
            throw ConfigError("line " + std::to_string(line_no) + ", column " + std::to_string(val_col) +
                                  ": invalid value for '" + key + "': " + e.what(),
                              line_no, val_col, key);
        }
    }
    finalize(c, given);
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const RunConfig& config)
{
    std::string out;
    for (const auto& f : fields()) out += f.name + " = " + f.get(config) + "\n";
    return out;
}

}  // namespace dmlpg

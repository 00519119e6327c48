#include "plb/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace plb {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ParseError("unknown field '" + key + "'");
  }
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int index_in_range(const json& v, int dim, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > dim) {
    throw ParseError(std::string(what) + " " + std::to_string(i) + " outside 1.." +
                     std::to_string(dim));
  }
  return i - 1;
}

Rational value_of(const json& v) {
  if (!v.is_string()) throw ParseError("values must be \"num/den\" strings");
  return Rational::parse(v.get<std::string>());
}

ScalarField parse_field(const json& f) {
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return ScalarField::rationals();
    throw ParseError("field must be \"Q\" or {\"p\": prime}");
  }
  if (f.is_object()) {
    reject_unknown_keys(f, {"p"});
    const auto& p = require(f, "p");
    if (!p.is_number_unsigned()) throw ParseError("field characteristic must be a positive integer");
    const auto value = p.get<std::uint64_t>();
    if (!is_prime(value) || value >= (1u << 31)) {
      throw ParseError("field characteristic " + std::to_string(value) + " is not a prime below 2^31");
    }
    return ScalarField::prime(static_cast<std::uint32_t>(value));
  }
  throw ParseError("field must be \"Q\" or {\"p\": prime}");
}

json field_json(const ScalarField& f) {
  if (f.is_rationals()) return "Q";
  return json{{"p", f.characteristic()}};
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");

  AlgebraFile f;
  const auto& version = require(j, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw ParseError("unsupported format_version");
  }
  const auto& kind = require(j, "kind");
  if (kind == "prelie") {
    f.kind = AlgebraFile::Kind::PreLie;
    reject_unknown_keys(j, {"format_version", "kind", "field", "dim", "basis", "entries"});
  } else if (kind == "brace") {
    f.kind = AlgebraFile::Kind::Brace;
    reject_unknown_keys(j, {"format_version", "kind", "field", "dim", "basis", "class_bound",
                            "entries"});
  } else {
    throw ParseError("kind must be \"prelie\" or \"brace\"");
  }
  f.field = parse_field(require(j, "field"));

  const auto& dim = require(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 1) throw ParseError("dim must be a positive integer");
  f.dim = dim.get<int>();

  if (j.contains("basis")) {
    const auto& basis = j.at("basis");
    if (!basis.is_array() || static_cast<int>(basis.size()) != f.dim) {
      throw ParseError("basis must list one name per dimension");
    }
    for (const auto& name : basis) {
      if (!name.is_string()) throw ParseError("basis names must be strings");
      f.basis.push_back(name.get<std::string>());
    }
  } else {
    for (int i = 1; i <= f.dim; ++i) f.basis.push_back("e" + std::to_string(i));
  }

  const auto& entries = require(j, "entries");
  if (!entries.is_array()) throw ParseError("entries must be an array");

  if (f.kind == AlgebraFile::Kind::PreLie) {
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 4) throw ParseError("prelie entries are [i, j, k, value]");
      f.prelie_entries.push_back({index_in_range(e[0], f.dim, "index i"),
                                  index_in_range(e[1], f.dim, "index j"),
                                  index_in_range(e[2], f.dim, "index k"), value_of(e[3])});
    }
    return f;
  }

  const auto& bound = require(j, "class_bound");
  if (!bound.is_number_integer() || bound.get<int>() < 2) {
    throw ParseError("class_bound must be an integer >= 2");
  }
  f.class_bound = bound.get<int>();
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 5) {
      throw ParseError("brace entries are [k, [i1..ik], j, out, value]");
    }
    if (!e[0].is_number_integer()) throw ParseError("degree must be an integer");
    const int k = e[0].get<int>();
    if (k < 1 || k >= f.class_bound) {
      throw ParseError("degree " + std::to_string(k) + " outside 1.." +
                       std::to_string(f.class_bound - 1));
    }
    if (!e[1].is_array() || static_cast<int>(e[1].size()) != k) {
      throw ParseError("left multi-index must have k entries");
    }
    std::vector<int> left;
    for (const auto& i : e[1]) left.push_back(index_in_range(i, f.dim, "left index"));
    f.brace_entries.push_back({k, std::move(left), index_in_range(e[2], f.dim, "index j"),
                               index_in_range(e[3], f.dim, "output index"), value_of(e[4])});
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

std::string dump_algebra_file(const AlgebraFile& f) {
  json entries = json::array();
  if (f.kind == AlgebraFile::Kind::PreLie) {
    auto sorted = f.prelie_entries;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (const auto& e : sorted) {
      entries.push_back(json::array({e.i + 1, e.j + 1, e.k + 1, e.value.str()}));
    }
  } else {
    auto sorted = f.brace_entries;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return std::tie(a.degree, a.left, a.right, a.out) <
             std::tie(b.degree, b.left, b.right, b.out);
    });
    for (const auto& e : sorted) {
      json left = json::array();
      for (int i : e.left) left.push_back(i + 1);
      entries.push_back(json::array({e.degree, left, e.right + 1, e.out + 1, e.value.str()}));
    }
  }
  // One key per line (sorted) and one entry per line.
  std::map<std::string, std::string> fields;
  fields["format_version"] = json(kFormatVersion).dump();
  fields["kind"] = json(f.kind == AlgebraFile::Kind::PreLie ? "prelie" : "brace").dump();
  fields["field"] = field_json(f.field).dump();
  fields["dim"] = json(f.dim).dump();
  fields["basis"] = json(f.basis).dump();
  if (f.kind == AlgebraFile::Kind::Brace) fields["class_bound"] = json(f.class_bound).dump();
  std::string list = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    list += (i ? ",\n  " : "\n  ") + entries[i].dump();
  }
  list += entries.empty() ? "]" : "\n ]";
  fields["entries"] = list;

  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : fields) {
    out += (first ? "\n \"" : ",\n \"") + key + "\": " + value;
    first = false;
  }
  return out + "\n}\n";
}

void save_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << dump_algebra_file(f);
}

}  // namespace plb

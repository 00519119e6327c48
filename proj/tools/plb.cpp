// plb: command-line front end for pre-Lie algebras and strongly nilpotent
// braces.
//
// Exit codes: 0 pass, 1 usage or parse error, 2 mathematical violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "plb/algebra_file.hpp"
#include "plb/bch.hpp"
#include "plb/brace.hpp"
#include "plb/flows.hpp"
#include "plb/free_expansion.hpp"
#include "plb/limits.hpp"

namespace {

using namespace plb;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct Options {
  std::string path;
  std::string field;
  std::string out;
  int trials = 20;
  std::uint64_t seed = kDefaultSeed;
  int degree = 4;
};

ScalarField parse_field_flag(const std::string& text) {
  if (text == "Q") return ScalarField::rationals();
  std::string digits = text;
  if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 10) {
    throw ParseError("--field must be Q, a prime p or F_p");
  }
  const auto p = std::stoull(digits);
  if (!is_prime(p) || p >= (1ull << 31)) {
    throw ParseError("--field " + text + " is not a prime below 2^31");
  }
  return ScalarField::prime(static_cast<std::uint32_t>(p));
}

AlgebraFile load(const Options& o) {
  auto f = load_algebra_file(o.path);
  if (!o.field.empty()) f.field = parse_field_flag(o.field);
  return f;
}

// Runs fn<S>() with the scalar type matching the field.
template <class F>
int with_scalar(const ScalarField& field, F&& fn) {
  if (field.is_rationals()) return fn.template operator()<Rational>();
  return fn.template operator()<ModP>();
}

void emit(const AlgebraFile& f, const std::string& out) {
  if (out.empty()) {
    std::cout << dump_algebra_file(f);
  } else {
    save_algebra_file(f, out);
  }
}

std::string dims(const auto& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    s += (i ? "," : "") + std::to_string(chain[i].dim());
  }
  return s;
}

template <class S>
std::string chain_line(const ChainReport<S>& r) {
  std::string line = "A: " + dims(r.left) + "; A^(): " + dims(r.right) + "; A^[]: " +
                     dims(r.strong) + "; ";
  if (r.strongly_nilpotent()) {
    line += "strongly nilpotent, index " + std::to_string(*r.strong_index);
  } else {
    line += std::string("not strongly nilpotent (left ") +
            (r.left_nilpotent() ? "nilpotent" : "not nilpotent") + ", right " +
            (r.right_nilpotent() ? "nilpotent" : "not nilpotent") + ")";
  }
  return line;
}

void report(const std::string& law, const std::optional<BraceViolation>& v, bool& ok) {
  if (v) {
    std::cout << "FAIL " << law << ": " << v->law << " at " << v->site << "\n";
    ok = false;
  } else {
    std::cout << "PASS " << law << "\n";
  }
}

int cmd_validate(const Options& o) {
  const auto file = load(o);
  return with_scalar(file.field, [&]<class S>() {
    if (file.kind == AlgebraFile::Kind::PreLie) {
      try {
        const auto alg = algebra_from_file<S>(file).validated();
        std::cout << "PASS pre-Lie identity\nPASS nilpotent, class "
                  << alg.nilpotency_class() << " over " << alg.field().str() << "\n";
        return kPass;
      } catch (const InvalidAlgebra& e) {
        std::cout << "FAIL " << e.what() << "\n";
        return kViolation;
      }
    }
    const auto br = brace_from_file<S>(file);
    if (auto site = first_asymmetry(br)) {
      std::cout << "FAIL symmetric tensors: " << *site << " differs from its sorted slot\n";
      return kViolation;
    }
    bool ok = true;
    report("left brace", check_left_brace(br, o.trials, o.seed), ok);
    report("group", check_group(br, o.trials, o.seed), ok);
    report("F-brace", check_fbrace(br, o.trials, o.seed), ok);
    const auto chains = radical_chains(br);
    std::cout << (chains.strongly_nilpotent() ? "PASS " : "FAIL ") << chain_line(chains) << "\n";
    ok = ok && chains.strongly_nilpotent();
    return ok ? kPass : kViolation;
  });
}

int cmd_to_brace(const Options& o) {
  const auto file = load(o);
  if (file.kind != AlgebraFile::Kind::PreLie) throw ParseError("to-brace expects a prelie file");
  return with_scalar(file.field, [&]<class S>() {
    const auto alg = algebra_from_file<S>(file).validated();
    emit(file_from_brace(to_brace(alg, o.seed), file.basis), o.out);
    return kPass;
  });
}

int cmd_to_prelie(const Options& o) {
  const auto file = load(o);
  if (file.kind != AlgebraFile::Kind::Brace) throw ParseError("to-prelie expects a brace file");
  return with_scalar(file.field, [&]<class S>() {
    const auto br = brace_from_file<S>(file);
    auto alg = PreLieAlgebra<S>::unchecked(br.field(), br.dim(), to_prelie(br).entries(),
                                           file.basis);
    emit(file_from_algebra(alg), o.out);
    return kPass;
  });
}

int cmd_roundtrip(const Options& o) {
  const auto file = load(o);
  return with_scalar(file.field, [&]<class S>() {
    std::optional<Mismatch> m;
    if (file.kind == AlgebraFile::Kind::PreLie) {
      m = roundtrip_prelie(algebra_from_file<S>(file).validated());
    } else {
      m = roundtrip_brace(brace_from_file<S>(file));
    }
    if (m) {
      std::cout << "FAIL round trip: " << m->what << "\n";
      return kViolation;
    }
    std::cout << "PASS round trip\n";
    return kPass;
  });
}

int cmd_chains(const Options& o) {
  const auto file = load(o);
  return with_scalar(file.field, [&]<class S>() {
    const auto br = file.kind == AlgebraFile::Kind::Brace
                        ? brace_from_file<S>(file)
                        : to_brace(algebra_from_file<S>(file).validated(), o.seed);
    const auto chains = radical_chains(br);
    std::cout << chain_line(chains) << "\n";
    return chains.strongly_nilpotent() ? kPass : kViolation;
  });
}

int cmd_bch(const Options& o) {
  const auto file = load(o);
  if (file.kind != AlgebraFile::Kind::PreLie) throw ParseError("bch expects a prelie file");
  return with_scalar(file.field, [&]<class S>() {
    const auto alg = algebra_from_file<S>(file).validated();
    if (auto v = verify_flows_bch(alg, o.trials, o.seed)) {
      std::cout << "FAIL " << v->law << " at " << v->site << "\n";
      return kViolation;
    }
    std::cout << "PASS W(a) o W(b) = W(C(a,b)) at class " << alg.nilpotency_class()
              << " (all basis pairs, " << o.trials << " random pairs)\n";
    return kPass;
  });
}

int cmd_doubling_matrix(const Options& o) {
  const auto dm = doubling_matrix(o.degree);
  const auto n = static_cast<Eigen::Index>(dm.basis.size());
  std::cout << "words:";
  for (const auto& w : dm.basis) std::cout << " " << w.str();
  std::cout << "\nM:\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) std::cout << (j ? " " : "  ") << dm.m(i, j).str();
    std::cout << "\n";
  }
  bool triangular = true;
  bool leaf_law = true;
  std::cout << "diagonal:";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) triangular = triangular && dm.m(i, j).is_zero();
    const int leaves = dm.basis[static_cast<std::size_t>(i)].count('x');
    leaf_law = leaf_law && dm.m(i, i) == Rational(1L << leaves);
    std::cout << " " << dm.m(i, i).str();
  }
  std::cout << "\nupper triangular: " << (triangular ? "yes" : "no")
            << "\ndiagonal = 2^(x-leaves): " << (leaf_law ? "yes" : "no") << "\n";
  return triangular && leaf_law ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pre-Lie algebra and strongly nilpotent brace toolkit"};
  app.require_subcommand(1);
  Options o;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.path, "algebra or brace file")->required();
    sub->add_option("--field", o.field, "override the file's field: Q, p or F_p");
    sub->add_option("--seed", o.seed, "seed for random samples");
    return sub;
  };
  auto* validate = with_file(app.add_subcommand("validate", "check the axioms of a file"));
  validate->add_option("--trials", o.trials, "random triples per law");
  auto* to_brace_cmd = with_file(app.add_subcommand("to-brace", "pre-Lie algebra to brace"));
  to_brace_cmd->add_option("--out", o.out, "output path (default stdout)");
  auto* to_prelie_cmd = with_file(app.add_subcommand("to-prelie", "brace to pre-Lie algebra"));
  to_prelie_cmd->add_option("--out", o.out, "output path (default stdout)");
  auto* roundtrip = with_file(app.add_subcommand("roundtrip", "run the matching round trip"));
  auto* chains = with_file(app.add_subcommand("chains", "radical chains of the brace"));
  auto* bch = with_file(app.add_subcommand("bch", "check W(a) o W(b) = W(C(a,b))"));
  bch->add_option("--trials", o.trials, "random pairs");
  auto* doubling = app.add_subcommand("doubling-matrix", "print the doubling matrix");
  doubling->add_option("--degree", o.degree, "degree bound s >= 2")
      ->check(CLI::Range(2, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*to_brace_cmd) return cmd_to_brace(o);
    if (*to_prelie_cmd) return cmd_to_prelie(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*chains) return cmd_chains(o);
    if (*bch) return cmd_bch(o);
    if (*doubling) return cmd_doubling_matrix(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

//
// wrc - right ideals and right congruences of semigroups
//
// Command line front end.  Exit status: 0 when every check passes, 1 when
// a check or verification fails, 2 on usage errors.
//

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wrc/backends.hpp"
#include "wrc/classify.hpp"
#include "wrc/congruence.hpp"
#include "wrc/constructions.hpp"
#include "wrc/dsl.hpp"
#include "wrc/fre.hpp"
#include "wrc/gallery.hpp"
#include "wrc/mfp.hpp"
#include "wrc/report.hpp"
#include "wrc/right_ideals.hpp"
#include "wrc/union_find.hpp"
#include "wrc/witnesses.hpp"
#include "wrc/wrc.hpp"
#include "wrc/xsequence.hpp"

namespace {

  using wrc::Element;
  using wrc::Error;
  using wrc::SemigroupPtr;
  using wrc::report::json;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct Options {
    std::optional<std::size_t> bound;
    std::size_t                depth  = 12;
    std::string                format = "text";
    std::uint64_t              seed   = 1;
  };

  struct Output {
    wrc::report::Format format;

    void emit(json const& rec) const {
      wrc::report::print(std::cout, rec, format);
    }
  };

  std::vector<Element> parse_elements(wrc::Semigroup const&           s,
                                      std::vector<std::string> const& xs) {
    std::vector<Element> out;
    for (auto const& x : xs) {
      out.push_back(s.parse(x));
    }
    return out;
  }

  wrc::PairSet<Element> parse_pairs(wrc::Semigroup const&           s,
                                    std::vector<std::string> const& xs) {
    wrc::PairSet<Element> out;
    for (auto const& x : xs) {
      auto toks = wrc::split_ws(x);
      if (toks.size() != 2) {
        throw UsageError("a pair is written 'p q', found '" + x + "'");
      }
      out.insert(s.parse(toks[0]), s.parse(toks[1]));
    }
    return out;
  }

  // U with S = US^1, exactly.
  std::vector<Element> right_ideal_basis(wrc::Semigroup const& s) {
    auto b = wrc::right_ideal_generators(s, 0);
    if (!b.found) {
      throw UsageError(s.describe() + " has no finite U with S = US^1 known; "
                       "give --u");
    }
    return b.generators;
  }

  wrc::PairSet<Element> annihilator_generators(wrc::Semigroup const& s,
                                               Element const&        a) {
    auto tab = wrc::tabulate(s);
    return wrc::to_elements(
        tab, wrc::extract_generators(tab.table, wrc::annihilator(tab.table, tab.of(a))));
  }

  int cmd_mul(Output const& out, SemigroupPtr const& s, std::string const& x,
              std::string const& y) {
    auto a = s->parse(x);
    auto b = s->parse(y);
    out.emit({{"kind", "product"},
              {"x", s->format(a)},
              {"y", s->format(b)},
              {"xy", s->format(s->multiply(a, b))}});
    return 0;
  }

  int cmd_intersect(Output const& out, Options const& opt, SemigroupPtr const& s,
                    std::string const& x, std::string const& y) {
    auto a     = s->parse(x);
    auto b     = s->parse(y);
    auto bound = opt.bound.value_or(6);
    auto r     = wrc::intersect_principal(s, a, b, bound);
    out.emit({{"kind", "ideal-intersect"},
              {"a", s->format(a)},
              {"b", s->format(b)},
              {"generators", wrc::report::elements(*s, r.generators)},
              {"exactness", r.exactness.str()}});
    return 0;
  }

  int cmd_cong_generate(Output const& out, Options const& opt, SemigroupPtr const& s,
                        std::vector<std::string> const& pair_text) {
    auto x      = parse_pairs(*s, pair_text);
    auto bound  = opt.bound.value_or(4);
    auto window = s->is_finite() ? s->elements() : s->enumerate(bound);
    wrc::SearchLimits lim{opt.depth, bound, 100000};
    std::vector<std::vector<Element>> classes;
    // Each element joins the first class whose representative is related
    // to it: exactly on finite semigroups, by X-sequence search otherwise.
    std::optional<wrc::Tabulation> tab;
    std::optional<wrc::Congruence> rho;
    if (s->is_finite()) {
      tab = wrc::tabulate(*s);
      rho = wrc::generate_congruence(tab->table, wrc::to_indices(*tab, x));
    }
    for (auto const& w : window) {
      bool placed = false;
      for (auto& cls : classes) {
        bool joined
            = rho ? rho->contains(tab->of(cls.front()), tab->of(w))
                  : wrc::find_xsequence(*s, x, cls.front(), w, lim).sequence.has_value();
        if (joined) {
          cls.push_back(w);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({w});
      }
    }
    json list = json::array();
    for (auto const& cls : classes) {
      list.push_back(wrc::text::join(
          [&] {
            std::vector<std::string> names;
            for (auto const& e : cls) {
              names.push_back(s->format(e));
            }
            return names;
          }(),
          " "));
    }
    out.emit({{"kind", "congruence"},
              {"generators", wrc::report::pairs(*s, x)},
              {"classes", list},
              {"exactness", s->is_finite() ? wrc::Exactness::full().str()
                                           : wrc::Exactness::up_to(bound).str()}});
    return 0;
  }

  int cmd_annihilator(Output const& out, Options const& opt, SemigroupPtr const& s,
                      std::string const& x) {
    auto a = s->parse(x);
    json rec{{"kind", "annihilator"}, {"a", s->format(a)}};
    if (s->is_finite()) {
      auto tab   = wrc::tabulate(*s);
      auto rho   = wrc::annihilator(tab.table, tab.of(a));
      auto gens  = annihilator_generators(*s, a);
      json cls   = json::array();
      auto all   = wrc::pairs_of(tab, rho);
      for (auto const& [p, q] : all.generators()) {
        if (p != q) {
          cls.push_back(s->format(p) + " " + s->format(q));
        }
      }
      rec["pairs"]      = cls;
      rec["generators"] = wrc::report::pairs(*s, gens);
      rec["exactness"]  = wrc::Exactness::full().str();
    } else {
      auto bound        = opt.bound.value_or(4);
      auto pairs        = wrc::annihilator_pairs(*s, a, bound);
      auto gens         = wrc::bounded_generating_set(*s, pairs, {opt.depth, bound, 100000});
      rec["pairs"]      = pairs.size();
      rec["generators"] = wrc::report::pairs(*s, gens);
      rec["exactness"]  = wrc::Exactness::up_to(bound).str();
    }
    out.emit(rec);
    return 0;
  }

  int cmd_check(Output const& out, Options const& opt, std::string const& what,
                SemigroupPtr const& s) {
    auto bound = opt.bound.value_or(6);
    if (what == "rih") {
      auto r = wrc::check_rih(s, bound);
      for (auto const& rec : wrc::report::rih(*s, r)) {
        out.emit(rec);
      }
      return r.verdict == wrc::Tri::yes ? 0 : 1;
    }
    if (what == "fre") {
      auto r = wrc::check_fre(*s, bound, {opt.depth, bound, 100000});
      for (auto const& rec : wrc::report::fre(*s, r)) {
        out.emit(rec);
      }
      return r.verdict == wrc::Tri::yes ? 0 : 1;
    }
    auto r = wrc::check_wrc(s, bound);
    out.emit(wrc::report::wrc(*s, r));
    return r.all_yes() ? 0 : 1;
  }

  struct WitnessArgs {
    std::string              a;
    std::string              b;
    std::string              x;
    std::vector<std::string> u;
    std::vector<std::string> v;
  };

  int cmd_witness(Output const& out, Options const& opt, std::string const& tag,
                  wrc::dsl::Expr const& expr, std::filesystem::path const& base,
                  WitnessArgs const& w) {
    auto need = [](std::string const& v, char const* flag) {
      if (v.empty()) {
        throw UsageError(std::string("this witness needs ") + flag);
      }
      return v;
    };
    auto s = wrc::dsl::build(expr, base);
    wrc::WitnessReport r;
    if (tag == "regular") {
      auto a  = s->parse(need(w.a, "--a"));
      auto b  = w.b.empty() ? std::optional<Element>() : s->parse(w.b);
      auto us = w.u.empty() ? right_ideal_basis(*s) : parse_elements(*s, w.u);
      if (!b) {
        // Some b with aba = a, if a is regular.
        for (auto const& c : s->is_finite() ? s->elements() : s->enumerate(opt.bound.value_or(4))) {
          if (s->multiply(s->multiply(a, c), a) == a) {
            b = c;
            break;
          }
        }
        if (!b) {
          throw UsageError(s->format(a) + " has no inverse in range; give --b");
        }
      }
      r = wrc::regular_witness(s, a, *b, us, opt.bound.value_or(6));
    } else if (tag == "product") {
      if (expr.name != "product") {
        throw UsageError("the product witness expects product(S, T)");
      }
      auto S  = wrc::dsl::build(expr.args[0], base);
      auto T  = wrc::dsl::build(expr.args[1], base);
      auto a  = S->parse(need(w.a, "--a"));
      auto b  = T->parse(need(w.b, "--b"));
      auto us = w.u.empty() ? right_ideal_basis(*S) : parse_elements(*S, w.u);
      auto vs = w.v.empty() ? right_ideal_basis(*T) : parse_elements(*T, w.v);
      if (!S->is_finite() || !T->is_finite()) {
        throw UsageError("the product witness needs finite factors");
      }
      r = wrc::product_witness(S, T, a, b, annihilator_generators(*S, a),
                               annihilator_generators(*T, b), us, vs);
    } else if (tag == "sfp") {
      auto f = std::dynamic_pointer_cast<wrc::FreeProduct const>(s);
      if (!f || f->monoid()) {
        throw UsageError("the sfp witness expects sfp(...)");
      }
      auto bound = opt.bound.value_or(3);
      r = wrc::sfp_witness(f, f->parse(need(w.a, "--a")), std::nullopt,
                           {opt.depth, bound, 100000});
    } else if (tag == "mfp") {
      auto f = std::dynamic_pointer_cast<wrc::FreeProduct const>(s);
      if (!f || !f->monoid()) {
        throw UsageError("the mfp witness expects mfp(...)");
      }
      auto ctx = wrc::make_mfp_context(f, f->parse(need(w.x, "--x")));
      r        = wrc::mfp_witness(ctx, opt.bound.value_or(3));
    } else {
      throw UsageError("unknown witness '" + tag + "' (regular, product, sfp, mfp)");
    }
    out.emit(wrc::report::witness(r));
    return r.applicable && r.verified ? 0 : 1;
  }

  // Certificate file: "semigroup <expr>", "pair <p> <q>" lines, then one
  // sequence "a | p q c | ... | b" per line.  '#' starts a comment line.
  int cmd_verify_seq(Output const& out, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open '" + path + "'");
    }
    auto                  base = std::filesystem::path(path).parent_path();
    SemigroupPtr          s;
    wrc::PairSet<Element> x;
    std::string           line;
    std::size_t           lineno = 0;
    std::size_t           checked = 0;
    bool                  ok      = true;
    while (std::getline(in, line)) {
      ++lineno;
      auto t = wrc::text::trim(line);
      if (t.empty() || t.front() == '#') {
        continue;
      }
      auto where = path + ":" + std::to_string(lineno) + ": ";
      try {
        if (t.rfind("semigroup ", 0) == 0) {
          s = wrc::dsl::build(t.substr(10), base);
          continue;
        }
        if (!s) {
          throw UsageError("the first entry must be 'semigroup <expr>'");
        }
        if (t.rfind("pair ", 0) == 0) {
          auto toks = wrc::split_ws(t.substr(5));
          if (toks.size() != 2) {
            throw UsageError("expected 'pair <p> <q>'");
          }
          x.insert(s->parse(toks[0]), s->parse(toks[1]));
          continue;
        }
        auto seq = wrc::parse_xsequence(*s, t);
        auto v   = wrc::verify_xsequence(*s, x, seq);
        ++checked;
        json rec{{"kind", "verify"},
                 {"line", lineno},
                 {"source", s->format(seq.source)},
                 {"target", s->format(seq.target)},
                 {"steps", seq.length()},
                 {"ok", v.ok}};
        if (!v.ok) {
          rec["failing_step"] = v.failing_step;
          rec["reason"]       = v.reason;
          ok                  = false;
        }
        out.emit(rec);
      } catch (wrc::Error const& e) {
        throw UsageError(where + e.what());
      }
    }
    if (checked == 0) {
      throw UsageError(path + ": no sequences to verify");
    }
    return ok ? 0 : 1;
  }

  int cmd_gallery(Output const& out, Options const& opt,
                  std::vector<std::string> names, std::vector<std::size_t> ns) {
    if (names.empty()) {
      names = wrc::fixture_names();
    }
    if (ns.empty()) {
      ns = {1, 2, 3};
    }
    for (auto n : ns) {
      if (n == 0) {
        throw UsageError("gallery: the rank n must be at least 1");
      }
    }
    for (auto const& name : names) {
      auto all = wrc::fixture_names();
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        throw UsageError("gallery: unknown fixture '" + name + "'");
      }
    }
    auto r = wrc::run_gallery(names, ns, opt.bound.value_or(5));
    for (auto const& rec : wrc::report::gallery(r)) {
      out.emit(rec);
    }
    return r.passed() ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wrc: right ideals and right congruences of semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::size_t bound = 0;
  app.add_option("--bound", bound, "grade bound for infinite semigroups");
  app.add_option("--depth", opt.depth, "X-sequence search depth");
  app.add_option("--format", opt.format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--seed", opt.seed, "seed for randomized runs");

  std::string expr_text;
  std::string x_text;
  std::string y_text;

  auto* mul = app.add_subcommand("mul", "product of two elements");
  mul->add_option("expr", expr_text)->required();
  mul->add_option("x", x_text)->required();
  mul->add_option("y", y_text)->required();

  auto* inter = app.add_subcommand("ideal-intersect", "generators of aS^1 n bS^1");
  inter->add_option("expr", expr_text)->required();
  inter->add_option("a", x_text)->required();
  inter->add_option("b", y_text)->required();

  std::vector<std::string> pair_text;
  auto* cong = app.add_subcommand("cong-generate", "classes of the right congruence <X>");
  cong->add_option("expr", expr_text)->required();
  cong->add_option("--pair", pair_text, "a generating pair 'p q'")->required();

  auto* ann = app.add_subcommand("annihilator", "r_S(a) and a generating set");
  ann->add_option("expr", expr_text)->required();
  ann->add_option("a", x_text)->required();

  std::string what;
  auto* check = app.add_subcommand("check", "RIH, FRE or WRC");
  check->add_option("property", what)
      ->required()
      ->check(CLI::IsMember({"rih", "fre", "wrc"}));
  check->add_option("expr", expr_text)->required();

  std::string tag;
  WitnessArgs wargs;
  auto* wit = app.add_subcommand("witness", "theorem witnesses with certificates");
  wit->add_option("theorem", tag)->required();
  wit->add_option("expr", expr_text)->required();
  wit->add_option("--a", wargs.a, "the element a");
  wit->add_option("--b", wargs.b, "b (regular: an inverse of a; product: second coordinate)");
  wit->add_option("--x", wargs.x, "the element x of a monoid free product");
  wit->add_option("--u", wargs.u, "U with S = US^1");
  wit->add_option("--v", wargs.v, "V with T = VT^1");

  std::string cert_path;
  auto* ver = app.add_subcommand("verify-seq", "check X-sequence certificates");
  ver->add_option("file", cert_path)->required();

  std::vector<std::string> fixtures;
  std::vector<std::size_t> ranks;
  auto* gal = app.add_subcommand("gallery", "run the counterexample fixtures");
  gal->add_option("--fixture", fixtures, "fixture name (repeatable)");
  gal->add_option("--n", ranks, "ranks to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }
  if (app.count("--bound") != 0) {
    opt.bound = bound;
  }
  Output out{opt.format == "json-lines" ? wrc::report::Format::json_lines
                                        : wrc::report::Format::text};
  try {
    auto target = [&] { return wrc::dsl::build(expr_text); };
    if (*mul) {
      return cmd_mul(out, target(), x_text, y_text);
    } else if (*inter) {
      return cmd_intersect(out, opt, target(), x_text, y_text);
    } else if (*cong) {
      return cmd_cong_generate(out, opt, target(), pair_text);
    } else if (*ann) {
      return cmd_annihilator(out, opt, target(), x_text);
    } else if (*check) {
      return cmd_check(out, opt, what, target());
    } else if (*wit) {
      return cmd_witness(out, opt, tag, wrc::dsl::parse_expression(expr_text), {},
                         wargs);
    } else if (*ver) {
      return cmd_verify_seq(out, cert_path);
    } else if (*gal) {
      return cmd_gallery(out, opt, fixtures, ranks);
    }
  } catch (wrc::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

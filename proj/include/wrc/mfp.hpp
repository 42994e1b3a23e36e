//
// wrc - right ideals and right congruences of semigroups
//
// Generating sets for r_F(x) in a monoid free product F of finite monoids,
// and X-sequences for the pairs of r_F(x) built from lifted factor
// sequences.
//
// Index convention: x = x_n * ... * x_1 is stored left to right, so the
// letter x_i is block n - i of the reduced form, and x_1 is the block next
// to whatever x is multiplied by.  Position i of x always meets position i
// of a in x * a.
//

#ifndef WRC_MFP_HPP_
#define WRC_MFP_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "constructions.hpp"
#include "element.hpp"
#include "semigroup.hpp"
#include "witnesses.hpp"
#include "xsequence.hpp"

namespace wrc {

  struct MfpLevel {
    std::size_t          factor = 0;
    Element              letter;
    std::vector<Element> right_inverses;
    std::optional<Element> t;
    PairSet<Element>     generators;
    std::shared_ptr<Tabulation const>        tab;
    std::shared_ptr<CongruenceClosure const> closure;
  };

  struct MfpContext {
    std::shared_ptr<FreeProduct const> f;
    Element                            x;
    // levels[i - 1] describes x_i.
    std::vector<MfpLevel> levels;
    // Least i with x_i not right invertible, if any.
    std::optional<std::size_t> n_index;
    // prefixes[k] = t_1 * ... * t_k for k < N.
    std::vector<Element> prefixes;

    std::size_t length() const noexcept {
      return levels.size();
    }

    MfpLevel const& level(std::size_t i) const {
      return levels.at(i - 1);
    }
  };

  // Builds the context for x.  The optional maps override the choice of
  // t_i (default: the first right inverse in enumeration order) and of the
  // generating set X_i (default: extracted from the closure).
  inline MfpContext
  make_mfp_context(std::shared_ptr<FreeProduct const> const& f, Element const& x,
                   std::map<std::size_t, Element> const&          t_choice = {},
                   std::map<std::size_t, PairSet<Element>> const& x_choice = {}) {
    if (!f->monoid()) {
      throw Error("mfp context: expects a monoid free product");
    }
    if (!f->contains(x)) {
      throw Error("mfp context: " + f->format(x) + " is not a reduced element");
    }
    MfpContext ctx;
    ctx.f = f;
    ctx.x = x;
    std::size_t n = x.parts.size();
    std::map<std::size_t, std::shared_ptr<Tabulation const>> tabs;
    for (std::size_t i = 1; i <= n; ++i) {
      MfpLevel lv;
      lv.factor = static_cast<std::size_t>(x.data[n - i]);
      lv.letter = x.parts[n - i];
      auto const& m = f->factor(lv.factor);
      if (!m->is_finite()) {
        throw Error("mfp context: factor " + std::to_string(lv.factor + 1)
                    + " is infinite (unsupported)");
      }
      if (tabs.count(lv.factor) == 0) {
        tabs.emplace(lv.factor, std::make_shared<Tabulation const>(tabulate(*m)));
      }
      lv.tab     = tabs[lv.factor];
      auto one   = f->factor_identity(lv.factor);
      for (auto const& r : lv.tab->elements) {
        if (m->multiply(lv.letter, r) == one) {
          lv.right_inverses.push_back(r);
        }
      }
      if (!lv.right_inverses.empty()) {
        lv.t = lv.right_inverses.front();
        if (auto it = t_choice.find(i); it != t_choice.end()) {
          if (m->multiply(lv.letter, it->second) != one) {
            throw Error("mfp context: t_" + std::to_string(i) + " = "
                        + m->format(it->second) + " is not a right inverse of "
                        + m->format(lv.letter));
          }
          lv.t = it->second;
        }
      }
      auto const& tab    = *lv.tab;
      auto        target = annihilator(tab.table, tab.of(lv.letter));
      if (auto it = x_choice.find(i); it != x_choice.end()) {
        if (!generates_annihilator(*m, it->second, lv.letter)) {
          throw Error("mfp context: X_" + std::to_string(i)
                      + " does not generate r(x_" + std::to_string(i) + ")");
        }
        lv.generators = it->second;
      } else {
        lv.generators = to_elements(tab, extract_generators(tab.table, target));
      }
      auto closure = std::make_shared<CongruenceClosure>(tab.table);
      closure->add_all(to_indices(tab, lv.generators));
      lv.closure = closure;
      if (!ctx.n_index && lv.right_inverses.empty()) {
        ctx.n_index = i;
      }
      ctx.levels.push_back(std::move(lv));
    }
    ctx.prefixes.push_back(f->identity().value());
    std::size_t last = ctx.n_index ? *ctx.n_index - 1 : n;
    for (std::size_t k = 1; k <= last; ++k) {
      auto const& lv = ctx.level(k);
      ctx.prefixes.push_back(
          f->multiply(ctx.prefixes.back(), f->embed(lv.factor, *lv.t)));
    }
    return ctx;
  }

  // X = union over i <= N of {(T_{i-1} * p, T_{i-1} * q) : (p, q) in X_i}.
  inline PairSet<Element> mfp_generators(MfpContext const& ctx) {
    PairSet<Element> out;
    if (!ctx.n_index) {
      return out;
    }
    for (std::size_t i = 1; i <= *ctx.n_index; ++i) {
      auto const& lv = ctx.level(i);
      auto const& pre = ctx.prefixes[i - 1];
      for (auto const& [p, q] : lv.generators.generators()) {
        out.insert(ctx.f->multiply(pre, ctx.f->embed(lv.factor, p)),
                   ctx.f->multiply(pre, ctx.f->embed(lv.factor, q)));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sequences
  ////////////////////////////////////////////////////////////////////////

  // How x * a reduces: l is the first position with x_l a_l != 1; type b
  // when a_l lies in the factor of x_l (so x_l a_l survives as one block).
  struct MfpReduction {
    std::size_t l      = 0;
    bool        type_b = false;
  };

  struct MfpTrace {
    MfpReduction a;
    MfpReduction b;
    // 1: both type (a); 2: both type (b); 3: mixed.
    int case_number = 0;
  };

  namespace detail {

    class MfpBuilder {
     public:
      explicit MfpBuilder(MfpContext const& ctx) : _ctx(ctx), _f(*ctx.f) {}

      MfpReduction classify(Element const& a) const {
        auto blocks = left_to_right(a);
        std::size_t k = 0;
        while (k < blocks.size() && k < _ctx.length()) {
          auto const& lv = _ctx.level(k + 1);
          if (blocks[k].first != lv.factor
              || _f.factor(lv.factor)->multiply(lv.letter, blocks[k].second)
                     != _f.factor_identity(lv.factor)) {
            break;
          }
          ++k;
        }
        MfpReduction r;
        r.l      = k + 1;
        r.type_b = k < blocks.size() && k < _ctx.length()
                   && blocks[k].first == _ctx.level(k + 1).factor;
        return r;
      }

      // A sequence from a to its normal form, which depends only on x * a.
      XSequence<Element> to_normal_form(Element const& a) {
        XSequence<Element> seq{a, a, {}};
        auto               blocks = left_to_right(a);
        auto               red    = classify(a);
        std::size_t        k      = red.l - 1;
        // Prefix replacement: a_1 * ... * a_k * r ~ T_k * r.
        for (std::size_t i = 1; i <= k; ++i) {
          auto w = rest(blocks, i);
          lift(seq, i, blocks[i - 1].second, *_ctx.level(i).t, w);
        }
        auto r = rest(blocks, k);
        if (red.type_b) {
          auto const& lv = _ctx.level(k + 1);
          auto const& m  = *_f.factor(lv.factor);
          auto        r1 = blocks[k].second;
          auto        y  = m.multiply(lv.letter, r1);
          auto        w  = rest(blocks, k + 1);
          if (y == lv.letter) {
            // Absorption: x_{k+1} r_1 = x_{k+1}.
            lift(seq, k + 1, r1, m.identity().value(), w);
            r = w;
          } else if (lv.t) {
            lift(seq, k + 1, r1, m.multiply(*lv.t, y), w);
            return seq;
          } else {
            // k + 1 = N: the first y* in enumeration order with x_N y* = y.
            for (auto const& c : lv.tab->elements) {
              if (m.multiply(lv.letter, c) == y) {
                lift(seq, k + 1, r1, c, w);
                break;
              }
            }
            return seq;
          }
        }
        // Type (a) at depth k: collapse t_j x_j while r starts with x_j.
        auto rb = left_to_right(r);
        std::size_t pos = 0;
        std::size_t j   = k;
        while (j >= 1 && pos < rb.size() && rb[pos].first == _ctx.level(j).factor
               && rb[pos].second == _ctx.level(j).letter) {
          auto const& lv = _ctx.level(j);
          auto const& m  = *_f.factor(lv.factor);
          auto        w  = rest(rb, pos + 1);
          lift(seq, j, m.multiply(*lv.t, lv.letter), m.identity().value(), w);
          ++pos;
          --j;
        }
        return seq;
      }

     private:
      std::vector<std::pair<std::size_t, Element>>
      left_to_right(Element const& a) const {
        std::vector<std::pair<std::size_t, Element>> out;
        for (std::size_t k = 0; k < a.parts.size(); ++k) {
          out.emplace_back(static_cast<std::size_t>(a.data[k]), a.parts[k]);
        }
        return out;
      }

      Element rest(std::vector<std::pair<std::size_t, Element>> const& blocks,
                   std::size_t from) const {
        std::vector<std::int64_t> tags;
        std::vector<Element>      parts;
        for (std::size_t k = from; k < blocks.size(); ++k) {
          tags.push_back(static_cast<std::int64_t>(blocks[k].first));
          parts.push_back(blocks[k].second);
        }
        return _f.canonical(Element::blocks(std::move(tags), std::move(parts)));
      }

      // Appends the lift of an X_i-sequence from y to y2 in the factor of x_i:
      // T_{i-1} * y * w ~ T_{i-1} * y2 * w.
      void lift(XSequence<Element>& seq, std::size_t i, Element const& y,
                Element const& y2, Element const& w) {
        auto const& lv  = _ctx.level(i);
        auto const& tab = *lv.tab;
        auto const& pre = _ctx.prefixes.at(i - 1);
        auto        end = _f.multiply(_f.multiply(pre, _f.embed(lv.factor, y2)), w);
        if (y == y2) {
          return;
        }
        auto cert = lv.closure->certificate(tab.of(y), tab.of(y2));
        if (!cert) {
          throw Error("mfp sequence: (" + _f.factor(lv.factor)->format(y) + ", "
                      + _f.factor(lv.factor)->format(y2)
                      + ") is not in r(x_" + std::to_string(i) + ")");
        }
        auto one = _f.identity().value();
        for (auto const& st : cert->steps) {
          auto    p = _f.multiply(pre, _f.embed(lv.factor, tab.at(st.p)));
          auto    q = _f.multiply(pre, _f.embed(lv.factor, tab.at(st.q)));
          Element c = st.c ? _f.multiply(_f.embed(lv.factor, tab.at(*st.c)), w) : w;
          seq.steps.push_back({std::move(p), std::move(q),
                               c == one ? std::nullopt : std::optional<Element>(c)});
        }
        seq.target = end;
      }

      MfpContext const&  _ctx;
      FreeProduct const& _f;
    };

  }  // namespace detail

  inline MfpTrace mfp_trace(MfpContext const& ctx, Element const& a,
                            Element const& b) {
    detail::MfpBuilder builder(ctx);
    MfpTrace           t{builder.classify(a), builder.classify(b), 0};
    t.case_number = t.a.type_b == t.b.type_b ? (t.a.type_b ? 2 : 1) : 3;
    return t;
  }

  // An X-sequence from a to b for (a, b) in r_F(x).  Each side is carried
  // to the normal form of x * a by prefix replacement, absorption of
  // x_l a_l = x_l, and the collapse of t_j x_j, every move a lifted factor
  // sequence; the result is the first chain followed by the second reversed.
  inline XSequence<Element> mfp_sequence(MfpContext const& ctx, Element const& a,
                                         Element const& b) {
    auto const& f = *ctx.f;
    if (f.multiply(ctx.x, a) != f.multiply(ctx.x, b)) {
      throw Error("mfp sequence: (" + f.format(a) + ", " + f.format(b)
                  + ") is not in r_F(x)");
    }
    if (a == b) {
      return {a, b, {}};
    }
    if (!ctx.n_index) {
      throw Error("mfp sequence: x is right invertible, so r_F(x) is trivial");
    }
    detail::MfpBuilder builder(ctx);
    auto               from_a = builder.to_normal_form(a);
    auto               from_b = builder.to_normal_form(b);
    if (from_a.target != from_b.target) {
      throw Error("mfp sequence: normal forms " + f.format(from_a.target)
                  + " and " + f.format(from_b.target) + " differ");
    }
    return from_a.append(from_b.reversed());
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness
  ////////////////////////////////////////////////////////////////////////

  inline WitnessReport mfp_witness(MfpContext const& ctx,
                                   std::size_t       block_grade = 3) {
    WitnessReport r;
    auto const&   f = *ctx.f;
    r.theorem       = "monoid-free-product";
    r.ambient       = ctx.f;
    r.input         = f.describe() + ", x = " + f.format(ctx.x);
    for (std::size_t i = 1; i <= ctx.length(); ++i) {
      auto const& lv = ctx.level(i);
      auto const& m  = *f.factor(lv.factor);
      std::string d  = "x_" + std::to_string(i) + " = " + m.format(lv.letter);
      if (lv.t) {
        d += ", t_" + std::to_string(i) + " = " + m.format(*lv.t) + " of "
             + std::to_string(lv.right_inverses.size()) + " right inverses";
      } else {
        d += " not right invertible";
      }
      bool ok = !lv.t || m.multiply(lv.letter, *lv.t) == f.factor_identity(lv.factor);
      r.hypotheses.push_back({"x_i t_i = 1 (i = " + std::to_string(i) + ")", ok, d});
      if (ctx.n_index && i == *ctx.n_index) {
        break;
      }
    }
    if (!ctx.n_index) {
      r.notes.push_back("every letter of x is right invertible: r_F(x) is "
                        "the identity congruence and the empty set generates it");
    } else {
      r.notes.push_back("N = " + std::to_string(*ctx.n_index));
    }
    r.notes.push_back("prefix replacement uses s_k in R_k, the right inverses "
                      "of x_k");
    r.notes.push_back("x_i is block n - i of x, read left to right");
    if (!r.hypotheses_hold()) {
      r.applicable = false;
      return r;
    }
    r.generators = mfp_generators(ctx);
    r.exactness  = Exactness::up_to(block_grade);
    r.verified   = true;
    // Inclusion, exactly.
    for (auto const& [p, q] : r.generators.generators()) {
      if (f.multiply(ctx.x, p) != f.multiply(ctx.x, q)) {
        r.verified = false;
        r.notes.push_back("generator (" + f.format(p) + ", " + f.format(q)
                          + ") is not in r_F(x)");
        return r;
      }
    }
    // Generation: a certificate for every related pair within the window.
    std::map<Element, std::vector<Element>> classes;
    for (auto const& a : f.enumerate(block_grade)) {
      classes[f.multiply(ctx.x, a)].push_back(a);
    }
    for (auto const& [key, cls] : classes) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          auto seq = mfp_sequence(ctx, cls[i], cls[j]);
          if (!verify_xsequence(f, r.generators, seq)) {
            r.verified = false;
            r.notes.push_back("certificate failed for (" + f.format(cls[i])
                              + ", " + f.format(cls[j]) + ")");
            return r;
          }
          r.certificates.push_back(std::move(seq));
        }
      }
    }
    return r;
  }

}  // namespace wrc

#endif  // WRC_MFP_HPP_

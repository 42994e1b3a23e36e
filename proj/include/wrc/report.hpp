//
// wrc - right ideals and right congruences of semigroups
//
// Reports as records: each record is a JSON object with a "kind" field,
// printed either one object per line or as indented text.
//

#ifndef WRC_REPORT_HPP_
#define WRC_REPORT_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "element.hpp"
#include "fre.hpp"
#include "gallery.hpp"
#include "right_ideals.hpp"
#include "semigroup.hpp"
#include "witnesses.hpp"
#include "wrc.hpp"
#include "xsequence.hpp"

namespace wrc::report {

  using json = nlohmann::ordered_json;

  enum class Format { text, json_lines };

  inline json pairs(Semigroup const& s, PairSet<Element> const& x) {
    json out = json::array();
    for (auto const& [p, q] : x.generators()) {
      out.push_back(s.format(p) + " " + s.format(q));
    }
    return out;
  }

  inline json elements(Semigroup const& s, std::vector<Element> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(s.format(x));
    }
    return out;
  }

  inline json witness(WitnessReport const& r) {
    json out{{"kind", "witness"},
             {"theorem", r.theorem},
             {"input", r.input},
             {"applicable", r.applicable},
             {"verified", r.verified},
             {"exactness", r.exactness.str()}};
    if (r.depth != 0) {
      out["depth"] = r.depth;
    }
    json hyps = json::array();
    for (auto const& h : r.hypotheses) {
      hyps.push_back(std::string(h.holds ? "[yes] " : "[no] ") + h.name
                     + (h.detail.empty() ? "" : " (" + h.detail + ")"));
    }
    out["hypotheses"] = hyps;
    if (r.ambient) {
      out["generators"] = pairs(*r.ambient, r.generators);
      if (!r.ideal_generators.empty()) {
        out["ideal_generators"] = elements(*r.ambient, r.ideal_generators);
      }
      json certs = json::array();
      for (auto const& c : r.certificates) {
        certs.push_back(format_xsequence(*r.ambient, c));
      }
      out["certificates"] = certs;
    }
    out["notes"] = r.notes;
    return out;
  }

  inline std::vector<json> rih(Semigroup const& s, RihReport const& r) {
    std::vector<json> out;
    for (auto const& p : r.pairs) {
      out.push_back({{"kind", "rih-pair"},
                     {"a", s.format(p.a)},
                     {"b", s.format(p.b)},
                     {"generators", elements(s, p.generators)},
                     {"exactness", p.exactness.str()},
                     {"bound", p.exactness.bound},
                     {"growing", p.growing}});
    }
    out.push_back({{"kind", "rih"},
                   {"semigroup", s.describe()},
                   {"verdict", to_string(r.verdict)},
                   {"exactness", r.exactness.str()},
                   {"note", r.note}});
    return out;
  }

  inline std::vector<json> fre(Semigroup const& s, FreReport const& r) {
    std::vector<json> out;
    for (auto const& e : r.entries) {
      out.push_back({{"kind", "fre-element"},
                     {"a", s.format(e.a)},
                     {"generators", pairs(s, e.generators)},
                     {"verified", e.verified},
                     {"minimal", e.minimal},
                     {"exactness", e.exactness.str()},
                     {"note", e.note}});
    }
    out.push_back({{"kind", "fre"},
                   {"semigroup", s.describe()},
                   {"verdict", to_string(r.verdict)},
                   {"exactness", r.exactness.str()}});
    return out;
  }

  inline json wrc(Semigroup const& s, WrcReport const& r) {
    json conds = json::array();
    for (auto c : r.conditions) {
      conds.push_back(to_string(c));
    }
    return {{"kind", "wrc"},
            {"semigroup", s.describe()},
            {"conditions", conds},
            {"coherent", r.coherent()},
            {"ideals_presented", r.ideals_presented},
            {"exactness", r.exactness.str()},
            {"notes", r.notes}};
  }

  inline std::vector<json> gallery(GalleryReport const& r) {
    std::vector<json> out;
    auto record = [](ClaimRecord const& c) {
      json j{{"kind", c.n == 0 ? "gallery-growth" : "gallery-claim"},
             {"fixture", c.fixture}};
      if (c.n != 0) {
        j["n"] = c.n;
      }
      j["claim"]     = c.claim;
      j["anchor"]    = c.anchor;
      j["passed"]    = c.result.passed;
      j["exactness"] = c.result.exactness.str();
      j["evidence"]  = c.result.evidence;
      if (!c.surrogate.empty()) {
        j["surrogate"] = c.surrogate;
      }
      if (c.result.metric) {
        j["metric"] = *c.result.metric;
      }
      return j;
    };
    for (auto const& c : r.records) {
      out.push_back(record(c));
    }
    for (auto const& c : r.growth) {
      out.push_back(record(c));
    }
    return out;
  }

  // Text: the scalar fields on one line, arrays as indented lists.
  inline void print_text(std::ostream& os, json const& rec) {
    std::string head = rec.value("kind", "record");
    for (auto const& [k, v] : rec.items()) {
      if (k == "kind" || v.is_array()) {
        continue;
      }
      head += "  " + k + "=";
      head += v.is_string() ? v.get<std::string>() : v.dump();
    }
    os << head << '\n';
    for (auto const& [k, v] : rec.items()) {
      if (!v.is_array() || v.empty()) {
        continue;
      }
      os << "  " << k << ":\n";
      for (auto const& item : v) {
        os << "    " << (item.is_string() ? item.get<std::string>() : item.dump())
           << '\n';
      }
    }
  }

  inline void print(std::ostream& os, json const& rec, Format f) {
    if (f == Format::json_lines) {
      os << rec.dump() << '\n';
    } else {
      print_text(os, rec);
    }
  }

}  // namespace wrc::report

#endif  // WRC_REPORT_HPP_

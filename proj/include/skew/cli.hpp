/*
   Copyright 2026 The skew authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/**
 * @file cli.hpp
 * @brief The `skew` command-line front end, callable in-process through run_cli.
 *
 * Exit codes: 0 conclusive, 1 some verdict Unknown, 2 usage, parse or
 * precondition error, 3 internal invariant failure (including campaign
 * disagreements).
 */

#include "skew/criteria.hpp"
#include "skew/oracle.hpp"
#include "skew/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace skew {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int unknown = 1;
inline constexpr int usage = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

namespace cli_detail {

using Json = nlohmann::ordered_json;

struct Common {
  std::string field;
  std::string ring;
  bool json = false;
  std::uint64_t budget = DecideOptions{}.budget;
};

/// Maps an exception escaping a command to an exit code, printing a diagnostic.
inline int exit_code_for(std::exception_ptr ep, std::ostream& err) {
  try {
    std::rethrow_exception(ep);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

template <class K>
std::string ring_label(const RingSpec<K>& r) {
  return to_string(r.field()) + " " + ring_to_string(r);
}

template <class K>
Json verdict_json(const RingSpec<K>& ring, const std::string& input, const Verdict<K>& v) {
  Json j;
  j["ring"] = ring_label(ring);
  j["input"] = input;
  j["verdict"] = std::string(to_string(v.outcome()));
  j["criterion"] = v.criterion() ? Json(std::string(to_string(*v.criterion()))) : Json(nullptr);
  if (v.is_reducible()) j["factors"] = Json::array({to_string(v.left()), to_string(v.right())});
  if (v.is_unknown()) j["reason"] = v.reason();
  j["timings"] = Json::object();
  return j;
}

template <class K>
std::string verdict_line(const Verdict<K>& v) {
  switch (v.outcome()) {
    case Outcome::irreducible: return "IRREDUCIBLE [" + std::string(to_string(*v.criterion())) + "]";
    case Outcome::reducible: return "REDUCIBLE: (" + to_string(v.left()) + ") * (" + to_string(v.right()) + ")";
    case Outcome::unknown: break;
  }
  return "UNKNOWN: " + v.reason();
}

/// Runs body with the parsed field type; body receives a RingPtr<K>.
template <class Body>
int with_ring(const Common& c, std::ostream& err, Body&& body) {
  try {
    const AnyField field = parse_field(c.field);
    return std::visit(
        [&](const auto& f) -> int {
          using F = std::decay_t<decltype(f)>;
          using K = typename F::value_type;
          RingPtr<K> ring;
          try {
            ring = share(parse_ring<K>(c.ring, f));
          } catch (const ParseError& e) {
            throw ParseError("ring: " + e.message(), e.column());
          }
          return body(ring);
        },
        field);
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

template <class K>
DecideOptions options(const Common& c) {
  DecideOptions o;
  o.budget = c.budget;
  return o;
}

/// Splits f into irreducible factors by repeated decide; false on an Unknown step.
template <class K>
bool factor_into(const SkewPoly<K>& f, const DecideOptions& opts, std::vector<SkewPoly<K>>& out, std::string& reason) {
  const Verdict<K> v = decide(f, opts);
  if (v.is_irreducible()) {
    out.push_back(f);
    return true;
  }
  if (v.is_unknown()) {
    reason = v.reason();
    return false;
  }
  return factor_into(v.left(), opts, out, reason) && factor_into(v.right(), opts, out, reason);
}

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--field", c.field, "Q, or F<p> for a prime p")->required();
  sub->add_option("--ring", c.ring, "quantum q=.., weyl q=.., ah h=.., twisted alpha=.. beta=..")->required();
  sub->add_flag("--json", c.json, "machine-readable output");
}

}  // namespace cli_detail

/// Runs the command line `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Arithmetic and irreducibility tests in skew polynomial rings K[y][t; sigma, delta]", "skew"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> polys;
  std::string b_text;
  int count = 4;
  int delta_n = 2;
  int t_degree = 2;
  int max_y_degree = 1;

  auto* decide_cmd = app.add_subcommand("decide", "decide irreducibility (reads one polynomial per line from stdin if none given)");
  add_common(decide_cmd, common);
  decide_cmd->add_option("--budget", common.budget, "maximum candidates per factor search");
  decide_cmd->add_option("poly", polys, "skew polynomials in left-coefficient form");

  auto* factor_cmd = app.add_subcommand("factor", "factor into irreducibles over F_p");
  add_common(factor_cmd, common);
  factor_cmd->add_option("--budget", common.budget, "maximum candidates per factor search");
  factor_cmd->add_option("poly", polys, "skew polynomial")->required();

  auto* mul_cmd = app.add_subcommand("mul", "multiply skew polynomials left to right");
  add_common(mul_cmd, common);
  mul_cmd->add_option("poly", polys, "factors")->required()->expected(2, -1);

  auto* norms_cmd = app.add_subcommand("norms", "print N_i(b) and M_i(b)");
  add_common(norms_cmd, common);
  norms_cmd->add_option("b", b_text, "polynomial in y")->required();
  norms_cmd->add_option("--count", count, "largest index")->check(CLI::Range(0, 64));

  auto* rem_cmd = app.add_subcommand("rem", "right and left remainders of f by t - b");
  add_common(rem_cmd, common);
  std::string f_text;
  rem_cmd->add_option("poly", f_text, "monic skew polynomial")->required();
  rem_cmd->add_option("b", b_text, "polynomial in y")->required();

  auto* delta_cmd = app.add_subcommand("delta", "print the operators Delta_{n,j} applied to b");
  add_common(delta_cmd, common);
  delta_cmd->add_option("b", b_text, "polynomial in y")->required();
  delta_cmd->add_option("--n", delta_n, "word length")->check(CLI::Range(0, 32));

  auto* campaign_cmd = app.add_subcommand("campaign", "compare decide with brute force on every monic f of a shape");
  add_common(campaign_cmd, common);
  campaign_cmd->add_option("--budget", common.budget, "maximum candidates per factor search");
  campaign_cmd->add_option("--t-degree", t_degree, "degree in t")->check(CLI::Range(1, 8));
  campaign_cmd->add_option("--max-y-degree", max_y_degree, "bound on coefficient y-degrees")->check(CLI::Range(0, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  if (decide_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      std::vector<std::string> inputs = polys;
      if (inputs.empty()) {
        std::string line;
        while (std::getline(in, line)) {
          if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
        }
      }
      int worst = exit_code::ok;
      for (const auto& text : inputs) {
        try {
          const SkewPoly<K> f = parse_poly<K>(text, ring);
          const Verdict<K> v = decide(f, options<K>(common));
          if (common.json) {
            out << verdict_json(*ring, text, v).dump() << "\n";
          } else {
            out << verdict_line(v) << "\n";
          }
          if (v.is_unknown()) worst = std::max(worst, exit_code::unknown);
        } catch (...) {
          worst = std::max(worst, exit_code_for(std::current_exception(), err));
        }
      }
      return worst;
    });
  }

  if (factor_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      if constexpr (!std::is_same_v<K, Residue>) {
        err << "error: factor requires a finite field F<p>\n";
        return exit_code::usage;
      } else {
        const SkewPoly<K> f = parse_poly<K>(polys.front(), ring);
        std::vector<SkewPoly<K>> parts;
        std::string reason;
        const bool ok = factor_into(f, options<K>(common), parts, reason);
        if (common.json) {
          Json j;
          j["ring"] = ring_label(*ring);
          j["input"] = polys.front();
          j["verdict"] = ok ? "FACTORED" : "UNKNOWN";
          Json fs = Json::array();
          for (const auto& p : parts) fs.push_back(to_string(p));
          if (ok) j["factors"] = fs;
          if (!ok) j["reason"] = reason;
          j["timings"] = Json::object();
          out << j.dump() << "\n";
        } else if (ok) {
          std::string line;
          for (const auto& p : parts) line += (line.empty() ? "(" : " * (") + to_string(p) + ")";
          out << "FACTORS: " << line << "\n";
        } else {
          out << "UNKNOWN: " << reason << "\n";
        }
        return ok ? exit_code::ok : exit_code::unknown;
      }
    });
  }

  if (mul_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      SkewPoly<K> acc = parse_poly<K>(polys.front(), ring);
      for (std::size_t i = 1; i < polys.size(); ++i) acc = acc * parse_poly<K>(polys[i], ring);
      if (common.json) {
        Json j;
        j["ring"] = ring_label(*ring);
        j["input"] = polys;
        j["product"] = to_string(acc);
        j["timings"] = Json::object();
        out << j.dump() << "\n";
      } else {
        out << to_string(acc) << "\n";
      }
      return exit_code::ok;
    });
  }

  if (norms_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      const YPoly<K> b = parse_ypoly<K>(b_text, ring->field());
      const auto N = norms_N(count, b, *ring);
      const auto M = norms_M(count, b, *ring);
      if (common.json) {
        Json j;
        j["ring"] = ring_label(*ring);
        j["b"] = b_text;
        Json jn = Json::array();
        Json jm = Json::array();
        for (const auto& p : N) jn.push_back(to_string(p));
        for (const auto& p : M) jm.push_back(to_string(p));
        j["N"] = jn;
        j["M"] = jm;
        j["timings"] = Json::object();
        out << j.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < N.size(); ++i) out << "N_" << i << " = " << to_string(N[i]) << "\n";
        for (std::size_t i = 0; i < M.size(); ++i) out << "M_" << i << " = " << to_string(M[i]) << "\n";
      }
      return exit_code::ok;
    });
  }

  if (rem_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      const SkewPoly<K> f = parse_poly<K>(f_text, ring);
      const YPoly<K> b = parse_ypoly<K>(b_text, ring->field());
      const YPoly<K> r = right_rem_linear(f, b);
      const YPoly<K> l = left_rem_linear(f, b);
      if (common.json) {
        Json j;
        j["ring"] = ring_label(*ring);
        j["input"] = f_text;
        j["b"] = b_text;
        j["right"] = to_string(r);
        j["left"] = to_string(l);
        j["timings"] = Json::object();
        out << j.dump() << "\n";
      } else {
        out << "right: " << to_string(r) << "\n";
        out << "left: " << to_string(l) << "\n";
      }
      return exit_code::ok;
    });
  }

  if (delta_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      const YPoly<K> b = parse_ypoly<K>(b_text, ring->field());
      const auto row = delta_row(delta_n, b, *ring);
      if (common.json) {
        Json j;
        j["ring"] = ring_label(*ring);
        j["b"] = b_text;
        j["n"] = delta_n;
        Json rows = Json::array();
        for (const auto& p : row) rows.push_back(to_string(p));
        j["delta"] = rows;
        j["timings"] = Json::object();
        out << j.dump() << "\n";
      } else {
        for (std::size_t jx = 0; jx < row.size(); ++jx) {
          out << "Delta_{" << delta_n << "," << jx << "} = " << to_string(row[jx]) << "\n";
        }
      }
      return exit_code::ok;
    });
  }

  if (campaign_cmd->parsed()) {
    return with_ring(common, err, [&](const auto& ring) {
      using K = typename std::decay_t<decltype(*ring)>::field_type::value_type;
      if constexpr (!std::is_same_v<K, Residue>) {
        err << "error: campaign requires a finite field F<p>\n";
        return exit_code::usage;
      } else {
        const CampaignReport rep = exhaustive_campaign(ring, t_degree, max_y_degree, options<K>(common));
        const std::string label = ring_label(*ring);
        for (const auto& r : rep.records) {
          if (common.json) {
            Json j;
            j["ring"] = label;
            j["f"] = to_string(r.f);
            j["verdict"] = std::string(to_string(r.verdict.outcome()));
            j["criterion"] = r.verdict.criterion() ? Json(std::string(to_string(*r.verdict.criterion()))) : Json(nullptr);
            j["oracle"] = r.oracle_reducible ? "REDUCIBLE" : "IRREDUCIBLE";
            j["agree"] = r.agree;
            out << j.dump() << "\n";
          } else if (!r.agree) {
            out << "DISAGREE: " << to_string(r.f) << ": " << verdict_line(r.verdict) << "; oracle "
                << (r.oracle_reducible ? "REDUCIBLE" : "IRREDUCIBLE") << "\n";
          }
        }
        if (common.json) {
          Json s;
          s["ring"] = label;
          s["total"] = rep.records.size();
          s["agreements"] = rep.agreements;
          s["disagreements"] = rep.disagreements;
          s["timings"] = Json::object();
          out << s.dump() << "\n";
        } else {
          out << "campaign " << label << ": " << rep.records.size() << " polynomials, " << rep.agreements << " agree, "
              << rep.disagreements << " disagree\n";
        }
        return rep.disagreements == 0 ? exit_code::ok : exit_code::internal;
      }
    });
  }
  return exit_code::usage;
}

}  // namespace skew

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnside/cellsearch.hpp"
#include "json.hpp"

namespace burnside {

/// One character block of the cell search, tied to a class of parabolic
/// subgroups. degenerations names the blocks this one can be degenerated
/// onto; every effective solution must contain each of their solutions.
struct ParabolicBlock {
  std::string label;
  CharacterTarget target;
  std::vector<std::string> degenerations;
  std::string parameter;
};

struct ParabolicConfig {
  std::vector<ParabolicBlock> blocks;
  std::map<std::string, long long> parameter_caps;

  [[nodiscard]] static ParabolicConfig from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
      throw std::invalid_argument("parabolic config: expected an object with a blocks array");
    ParabolicConfig cfg;
    std::size_t arity = 0;
    for (const auto& b : j.at("blocks")) {
      ParabolicBlock blk;
      blk.label = b.at("label").get<std::string>();
      if (blk.label.empty()) throw std::invalid_argument("parabolic config: empty block label");
      for (const auto& other : cfg.blocks)
        if (other.label == blk.label) throw std::invalid_argument("parabolic config: duplicate block " + blk.label);
      blk.target.multiplicities = b.at("target").get<std::vector<long long>>();
      if (arity == 0) arity = blk.target.multiplicities.size();
      if (blk.target.multiplicities.size() != arity || arity == 0)
        throw std::invalid_argument("parabolic config: target arity mismatch in " + blk.label);
      for (long long m : blk.target.multiplicities)
        if (m < 0) throw std::invalid_argument("parabolic config: negative multiplicity in " + blk.label);
      if (b.contains("degenerations")) blk.degenerations = b.at("degenerations").get<std::vector<std::string>>();
      if (b.contains("parameter")) blk.parameter = b.at("parameter").get<std::string>();
      cfg.blocks.push_back(std::move(blk));
    }
    if (j.contains("parameter_caps"))
      for (const auto& [label, cap] : j.at("parameter_caps").items()) cfg.parameter_caps[label] = cap.get<long long>();
    for (const auto& blk : cfg.blocks)
      for (const auto& d : blk.degenerations) {
        bool known = false;
        for (const auto& other : cfg.blocks) known = known || other.label == d;
        if (!known) throw std::invalid_argument("parabolic config: " + blk.label + " degenerates to unknown block " + d);
        if (d == blk.label) throw std::invalid_argument("parabolic config: " + blk.label + " degenerates to itself");
      }
    return cfg;
  }

  [[nodiscard]] static ParabolicConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("parabolic config: cannot open " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("parabolic config: " + path + ": " + e.what());
    }
    return from_json(j);
  }
};

/// Solution family of one block. solutions is the expanded list, ordered by
/// the multiplicity of the parameter orbit; for a family with more than one
/// member, base is the first solution and member t equals base + t * step.
/// bound_computed is the largest parameter value the search allows;
/// bound_reported additionally honours a configured cap. coupled lists the
/// non-unique blocks this one degenerates onto: their parameter values bound
/// this one's from below, which no per-block search can decide.
struct BlockFamily {
  std::string label;
  CharacterTarget target;
  RingElement required;
  std::vector<RingElement> solutions;
  std::string parameter;
  RingElement base;
  RingElement step;
  bool linear = true;
  long long bound_computed = 0;
  long long bound_reported = 0;
  std::vector<std::string> coupled;

  [[nodiscard]] bool unique() const { return solutions.size() == 1; }
};

namespace detail {

/// Index of the orbit whose multiplicity varies across the family: the one
/// with the largest spread, ties broken towards the largest basis index so
/// the K1 orbit wins over the S3/D8 orbits it trades against.
[[nodiscard]] inline int family_parameter_index(const std::vector<RingElement>& sols) {
  std::map<int, std::pair<long long, long long>> range;
  for (const auto& s : sols)
    for (const auto& [i, c] : s) {
      auto it = range.find(i);
      if (it == range.end())
        range[i] = {0, c};
      else
        it->second = {std::min(it->second.first, c), std::max(it->second.second, c)};
    }
  int best = -1;
  long long spread = 0;
  for (const auto& [i, r] : range)
    if (r.second - r.first >= spread) {
      best = i;
      spread = r.second - r.first;
    }
  return best;
}

[[nodiscard]] inline long long coeff_of(const RingElement& x, int i) {
  const auto it = x.find(i);
  return it == x.end() ? 0 : it->second;
}

}  // namespace detail

/// Solve every block in order, requiring each solution to contain the unique
/// solutions of all blocks it degenerates onto. Blocks whose own family is
/// not unique contribute no containment requirement; they are surfaced in
/// coupled instead. Throws if a block degenerates onto one that has not been
/// solved yet: the config must list blocks in degeneration order.
[[nodiscard]] inline std::vector<BlockFamily> parabolic_families(const BurnsideRing& R, const ParabolicConfig& cfg) {
  std::vector<BlockFamily> out;
  std::map<std::string, std::size_t> solved;
  for (const auto& blk : cfg.blocks) {
    BlockFamily fam;
    fam.label = blk.label;
    fam.target = blk.target;
    fam.parameter = blk.parameter;
    for (const auto& d : blk.degenerations) {
      const auto it = solved.find(d);
      if (it == solved.end())
        throw std::invalid_argument("parabolic_families: " + blk.label + " degenerates to " + d +
                                    " which is not solved yet; blocks must be listed in degeneration order");
      const BlockFamily& pred = out[it->second];
      if (pred.unique()) {
        for (const auto& [i, c] : pred.solutions.front()) {
          auto& r = fam.required[i];
          r = std::max(r, c);
        }
      } else {
        fam.coupled.push_back(d);
      }
    }
    // Keep only the maximal coupled predecessors: a block reachable from
    // another coupled block adds no independent lower bound.
    std::vector<std::string> maximal;
    for (const auto& c : fam.coupled) {
      bool dominated = false;
      for (const auto& other : fam.coupled) {
        if (other == c) continue;
        const auto& degs = cfg.blocks[solved.at(other)].degenerations;
        dominated = dominated || std::find(degs.begin(), degs.end(), c) != degs.end();
      }
      if (!dominated) maximal.push_back(c);
    }
    fam.coupled = std::move(maximal);

    fam.solutions = solve_effective(R, blk.target, &fam.required);
    if (!fam.solutions.empty()) {
      if (fam.solutions.size() > 1) {
        const int p = detail::family_parameter_index(fam.solutions);
        std::sort(fam.solutions.begin(), fam.solutions.end(), [&](const RingElement& a, const RingElement& b) {
          const long long ca = detail::coeff_of(a, p);
          const long long cb = detail::coeff_of(b, p);
          return ca != cb ? ca < cb : a < b;
        });
      }
      fam.base = fam.solutions.front();
      if (fam.solutions.size() > 1) {
        for (const auto& [i, c] : fam.solutions[1]) fam.step[i] = c - detail::coeff_of(fam.base, i);
        for (const auto& [i, c] : fam.base)
          if (fam.solutions[1].find(i) == fam.solutions[1].end()) fam.step[i] = -c;
        fam.bound_computed = static_cast<long long>(fam.solutions.size()) - 1;
        for (std::size_t t = 0; t < fam.solutions.size(); ++t) {
          RingElement expect = fam.base;
          for (const auto& [i, c] : fam.step) {
            expect[i] += static_cast<long long>(t) * c;
            if (expect[i] == 0) expect.erase(i);
          }
          fam.linear = fam.linear && expect == fam.solutions[t];
        }
      }
    }
    fam.bound_reported = fam.bound_computed;
    const auto cap = cfg.parameter_caps.find(blk.label);
    if (cap != cfg.parameter_caps.end()) fam.bound_reported = std::min(fam.bound_reported, cap->second);

    solved[blk.label] = out.size();
    out.push_back(std::move(fam));
  }
  return out;
}

namespace detail {

/// One coefficient of a family in the parameter presentation: "(6-t)*S3",
/// "(7+t)*S4", "t*K1", or a plain term when the step is zero there.
[[nodiscard]] inline std::string family_term(long long base, long long step, const std::string& label,
                                             const std::string& parameter) {
  std::ostringstream os;
  if (step == 0) {
    if (base != 1) os << base << "*";
    os << label;
    return os.str();
  }
  if (base == 0 && step == 1) {
    os << parameter << "*" << label;
    return os.str();
  }
  os << "(" << base;
  if (step == 1)
    os << "+" << parameter;
  else if (step == -1)
    os << "-" << parameter;
  else if (step > 0)
    os << "+" << step << "*" << parameter;
  else
    os << "-" << -step << "*" << parameter;
  os << ")*" << label;
  return os.str();
}

}  // namespace detail

/// Family as text: the unique solution, or the base-plus-parameter form with
/// the parameter's bounds. Lower bounds coming from coupled blocks render as
/// max() over their parameters; a configured cap below the computed bound is
/// noted explicitly.
[[nodiscard]] inline std::string family_to_string(const BurnsideRing& R, const BlockFamily& fam,
                                                  const std::vector<BlockFamily>& all) {
  if (fam.solutions.empty()) return "(no solution)";
  if (fam.unique()) return R.to_string(fam.solutions.front());
  if (!fam.linear) {
    std::string s;
    for (const auto& sol : fam.solutions) s += (s.empty() ? "" : " | ") + R.to_string(sol);
    return s;
  }
  const std::string p = fam.parameter.empty() ? "t" : fam.parameter;
  std::map<int, long long> keys;
  for (const auto& [i, c] : fam.base) keys.emplace(i, c);
  for (const auto& [i, c] : fam.step) keys.emplace(i, c);
  std::string s;
  for (const auto& [i, unused] : keys) {
    (void)unused;
    const auto term =
        detail::family_term(detail::coeff_of(fam.base, i), detail::coeff_of(fam.step, i), R.basis(i).label, p);
    s += (s.empty() ? "" : " + ") + term;
  }
  std::string lower;
  for (const auto& c : fam.coupled)
    for (const auto& other : all)
      if (other.label == c) lower += (lower.empty() ? "" : ", ") + (other.parameter.empty() ? other.label : other.parameter);
  s += ", ";
  if (!lower.empty()) s += (fam.coupled.size() > 1 ? "max(" + lower + ")" : lower) + " <= ";
  s += p + " <= " + std::to_string(fam.bound_reported);
  if (fam.bound_reported != fam.bound_computed)
    s += " (search allows " + std::to_string(fam.bound_computed) + ")";
  return s;
}

[[nodiscard]] inline std::string parabolic_text_table(const BurnsideRing& R, const std::vector<BlockFamily>& fams) {
  std::ostringstream os;
  os << "block | character | solutions\n";
  for (const auto& fam : fams) {
    os << fam.label << " |";
    for (long long m : fam.target.multiplicities) os << " " << m;
    os << " | " << family_to_string(R, fam, fams) << "\n";
  }
  return os.str();
}

[[nodiscard]] inline nlohmann::json parabolic_json(const BurnsideRing& R, const std::vector<BlockFamily>& fams) {
  const auto coeffs = [&](const RingElement& x) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [i, c] : x) o[R.basis(i).label] = c;
    return o;
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& fam : fams) {
    nlohmann::json o{{"block", fam.label},
                     {"target", fam.target.multiplicities},
                     {"required", coeffs(fam.required)},
                     {"unique", fam.unique()}};
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& s : fam.solutions) sols.push_back(coeffs(s));
    o["solutions"] = sols;
    if (!fam.unique() && !fam.solutions.empty()) {
      o["family"] = nlohmann::json{{"parameter", fam.parameter.empty() ? "t" : fam.parameter},
                                   {"base", coeffs(fam.base)},
                                   {"bound_computed", fam.bound_computed},
                                   {"bound_reported", fam.bound_reported},
                                   {"coupled", fam.coupled}};
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace burnside

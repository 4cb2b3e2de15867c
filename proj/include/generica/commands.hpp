/*
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

#ifndef GENERICA_COMMANDS_HPP
#define GENERICA_COMMANDS_HPP

#include <chrono>

#include "eagon_northcott.hpp"
#include "report.hpp"
#include "session.hpp"

namespace generica {

struct RunOptions {
  std::uint64_t seed = 1;
  int budget = 200;
};

namespace detail {

inline const Ideal& get_ideal(const Session& s, const std::string& name, const Command& c) {
  auto it = s.ideals.find(name);
  if (it == s.ideals.end())
    throw ParseError("unknown ideal '" + name + "'", c.line, c.col);
  return it->second;
}

inline const std::vector<Polynomial>& get_tuple(const Session& s, const std::string& name,
                                                const Command& c) {
  auto it = s.tuples.find(name);
  if (it == s.tuples.end())
    throw ParseError("unknown tuple '" + name + "'", c.line, c.col);
  return it->second;
}

inline const PolyMatrix& get_matrix(const Session& s, const std::string& name, const Command& c) {
  auto it = s.matrices.find(name);
  if (it == s.matrices.end())
    throw ParseError("unknown matrix '" + name + "'", c.line, c.col);
  return it->second;
}

inline const PerturbSpace& get_space(const Session& s, const std::string& name, const Command& c) {
  auto it = s.spaces.find(name);
  if (it == s.spaces.end())
    throw ParseError("unknown space '" + name + "'", c.line, c.col);
  return it->second;
}

inline void need_args(const Command& c, std::size_t n) {
  if (c.args.size() < n)
    throw ParseError("command '" + c.name + "' needs " + std::to_string(n) + " argument(s)",
                     c.line, c.col);
}

inline Ideal module_arg(const Session& s, const Command& c) {
  // --on J names the cyclic module R/J; default M = R
  if (c.has("on")) return get_ideal(s, c.opt("on"), c);
  return Ideal(*s.ring, {});
}

inline std::vector<int> parse_int_list(const std::string& v) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = v.find(',', i);
    if (j == std::string::npos) j = v.size();
    out.push_back(std::stoi(v.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

inline std::vector<std::string> parse_name_list(const std::string& v) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = v.find(',', i);
    if (j == std::string::npos) j = v.size();
    out.push_back(v.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

inline nlohmann::json witness_payload(const SearchOutcome& out, const RingCtx& R,
                                      int budget = -1) {
  nlohmann::json j;
  j["found"] = out.found;
  j["trials_used"] = out.found ? out.witness.trials_used : out.trials_used;
  if (budget >= 0) j["budget"] = budget;
  j["hypothesis_ok"] = out.hypothesis_ok;
  j["hypothesis_note"] = out.hypothesis_note;
  if (!out.found) {
    j["failure"] = out.failure;
    return j;
  }
  const PerturbWitness& w = out.witness;
  nlohmann::json g = nlohmann::json::array();
  for (const auto& p : w.g.c) g.push_back(poly_str(R, p));
  j["g"] = g;
  if (w.psi.rows > 0) {
    nlohmann::json psi = nlohmann::json::array();
    for (int i = 0; i < w.psi.rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jj = 0; jj < w.psi.cols; ++jj) row.push_back(poly_str(R, w.psi.at(i, jj)));
      psi.push_back(row);
    }
    j["psi"] = psi;
  }
  j["invariant_before"] = w.invariant_before;
  j["invariant_after"] = w.invariant_after;
  j["reverified"] = w.verify();
  return j;
}

inline MatrixShape shape_by_name(const std::string& kind, int m, int n, const Command& c) {
  if (kind == "generic") return MatrixShape::generic(m, n);
  if (kind == "symmetric") return MatrixShape::symmetric(m);
  if (kind == "skew") return MatrixShape::skew(m);
  throw ParseError("unknown matrix kind '" + kind + "'", c.line, c.col);
}

inline nlohmann::json profile_payload(const DetProfile& prof) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : prof.rows) {
    nlohmann::json row;
    row["j"] = r.j;
    row["generators"] = r.generators;
    row["height"] = r.computed_height;
    row["expected"] = r.expected;
    row["matches"] = r.matches ? 1 : 0;
    if (r.computed_grade >= 0) row["grade"] = grade_to_json(r.computed_grade);
    rows.push_back(row);
  }
  nlohmann::json j;
  j["kind"] = prof.shape.kind_name();
  j["m"] = prof.shape.m;
  j["n"] = prof.shape.n;
  j["rows"] = rows;
  j["all_match"] = prof.all_match;
  return j;
}

inline nlohmann::json dispatch(Session& s, const Command& c, const RunOptions& opt) {
  if (!s.ring) throw ParseError("ring not declared", c.line, c.col);
  const RingCtx& R = *s.ring;
  nlohmann::json j;

  if (c.name == "gb") {
    need_args(c, 1);
    const Ideal& I = get_ideal(s, c.args[0], c);
    I.certify();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : I.groebner()) basis.push_back(poly_str(R, b));
    j["groebner"] = basis;
    j["size"] = I.groebner().size();
    j["certified"] = true;
    return j;
  }
  if (c.name == "nf") {
    need_args(c, 2);
    const auto& t = get_tuple(s, c.args[0], c);
    const Ideal& I = get_ideal(s, c.args[1], c);
    nlohmann::json nfs = nlohmann::json::array();
    for (const auto& p : t) nfs.push_back(poly_str(R, I.nf(p)));
    j["normal_forms"] = nfs;
    return j;
  }
  if (c.name == "dim") {
    need_args(c, 1);
    j["dim"] = krull_dim(get_ideal(s, c.args[0], c));
    return j;
  }
  if (c.name == "height") {
    need_args(c, 1);
    HeightReport h = height(get_ideal(s, c.args[0], c));
    j["height"] = h.height;
    j["dim_ambient"] = h.dim_ambient;
    j["dim_quotient"] = h.dim_quotient;
    j["equidimensionality_assumed"] = h.equidimensionality_assumed;
    return j;
  }
  if (c.name == "grade") {
    need_args(c, 1);
    const Ideal& I = get_ideal(s, c.args[0], c);
    Ideal M = module_arg(s, c);
    std::string method = c.opt("method", "koszul");
    if (method == "koszul" || method == "all") {
      GradeReport g = grade_koszul(I, M);
      j["grade"] = grade_to_json(g.grade);
      j["method"] = "koszul";
    }
    if (method == "ext" || method == "all") {
      GradeReport g = grade_via_ext(I, M);
      j["grade_ext"] = grade_to_json(g.grade);
      if (method == "ext") {
        j["grade"] = j["grade_ext"];
        j["method"] = "ext";
      }
    }
    if (method == "direct" || method == "all") {
      Rng rng(opt.seed);
      GradeReport g = grade_direct(I, M, rng);
      j["grade_direct"] = grade_to_json(g.grade);
      j["uncertified"] = g.uncertified;
      nlohmann::json w = nlohmann::json::array();
      for (const auto& p : g.witness) w.push_back(poly_str(R, p));
      j["witness"] = w;
      if (method == "direct") {
        j["grade"] = j["grade_direct"];
        j["method"] = "direct";
      }
    }
    if (method == "all") {
      j["method"] = "all";
      j["agree"] = (j["grade"] == j["grade_ext"] && j["grade"] == j["grade_direct"]);
    }
    return j;
  }
  if (c.name == "regseq") {
    need_args(c, 1);
    RegSeqReport r = regular_sequence_check(get_tuple(s, c.args[0], c), module_arg(s, c));
    j["regular"] = r.regular;
    j["fail_index"] = r.fail_index;
    return j;
  }
  if (c.name == "koszul") {
    need_args(c, 1);
    Ideal M = module_arg(s, c);
    ChainComplex K = koszul_complex(R, get_tuple(s, c.args[0], c), M.gens());
    j["ranks"] = K.ranks;
    nlohmann::json hom = nlohmann::json::array();
    for (int i = 0; i <= K.length(); ++i) {
      nlohmann::json slot;
      slot["slot"] = i;
      slot["vanishes"] = homology_vanishes(K, i).vanishes;
      hom.push_back(slot);
    }
    j["homology"] = hom;
    return j;
  }
  if (c.name == "detideal") {
    need_args(c, 2);
    const PolyMatrix& m = get_matrix(s, c.args[0], c);
    int r = std::stoi(c.args[1]);
    std::vector<int> rows, cols;
    if (c.has("rows")) rows = parse_int_list(c.opt("rows"));
    if (c.has("cols")) cols = parse_int_list(c.opt("cols"));
    Ideal I = det_ideal(R, m, r, rows, cols);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.gens()) gens.push_back(poly_str(R, g));
    j["generators"] = gens;
    j["count"] = I.gens().size();
    if (!I.is_unit() && !I.is_zero_in_ring()) j["height"] = height(I).height;
    return j;
  }
  if (c.name == "profile") {
    need_args(c, 1);
    bool with_grade = c.has("grade");
    if (s.matrices.count(c.args[0])) {
      const PolyMatrix& m = get_matrix(s, c.args[0], c);
      MatrixShape shape = shape_by_name(c.opt("kind", "generic"), m.rows, m.cols, c);
      return profile_payload(det_profile(R, m, shape, with_grade));
    }
    need_args(c, c.args[0] == "generic" ? 3 : 2);
    int m = std::stoi(c.args[1]);
    int n = c.args[0] == "generic" ? std::stoi(c.args[2]) : m;
    MatrixShape shape = shape_by_name(c.args[0], m, n, c);
    auto [Rg, phi] = generic_matrix_ring(shape, R.field);
    return profile_payload(det_profile(Rg, phi, shape, with_grade));
  }
  if (c.name == "en") {
    need_args(c, 1);
    const PolyMatrix& m = get_matrix(s, c.args[0], c);
    int threshold = static_cast<int>(c.opt_int("r", -1));
    std::vector<int> which = c.has("i") ? std::vector<int>{static_cast<int>(c.opt_int("i", 0))}
                                        : std::vector<int>{0, 1};
    nlohmann::json complexes = nlohmann::json::array();
    for (int i : which) {
      ChainComplex C = eagon_northcott(R, m, i);
      nlohmann::json cj;
      cj["i"] = i;
      cj["ranks"] = C.ranks;
      nlohmann::json hom = nlohmann::json::array();
      bool interior = true;
      for (int slot = 1; slot <= C.length(); ++slot) {
        bool v = homology_vanishes(C, slot).vanishes;
        if (!v) interior = false;
        nlohmann::json sj;
        sj["slot"] = slot;
        sj["vanishes"] = v;
        hom.push_back(sj);
      }
      cj["homology"] = hom;
      cj["acyclic"] = interior;
      complexes.push_back(cj);
    }
    j["complexes"] = complexes;
    EnGradeReport rep = en_acyclic_by_grade(R, m, threshold);
    nlohmann::json lv = nlohmann::json::array();
    for (const auto& l : rep.levels) {
      nlohmann::json lj;
      lj["j"] = l.j;
      lj["grade"] = grade_to_json(l.computed_grade);
      lj["expected"] = l.expected;
      lj["matches"] = l.matches ? 1 : 0;
      lv.push_back(lj);
    }
    j["grade_levels"] = lv;
    nlohmann::json vd = nlohmann::json::array();
    for (const auto& v : rep.verdicts) {
      nlohmann::json vj;
      vj["i"] = v.i;
      vj["acyclic_by_grade"] = v.acyclic;
      vj["required"] = v.required;
      vd.push_back(vj);
    }
    j["verdicts"] = vd;
    return j;
  }
  if (c.name == "tor" || c.name == "ext") {
    need_args(c, 2);
    const Ideal& A = get_ideal(s, c.args[0], c);
    const Ideal& B = get_ideal(s, c.args[1], c);
    if (c.name == "ext" && c.has("grade")) {
      j["grade"] = grade_to_json(grade_via_ext(A, B).grade);
      return j;
    }
    int jj = static_cast<int>(c.opt_int("j", 1));
    j["j"] = jj;
    j["vanishes"] = c.name == "tor" ? tor_vanishes(A, B, jj) : ext_vanishes(A, B, jj);
    return j;
  }
  if (c.name == "perturb") {
    need_args(c, 2);
    SearchConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(c.opt_int("seed", static_cast<long long>(opt.seed)));
    cfg.budget = static_cast<int>(c.opt_int("budget", opt.budget));
    const std::string mode = c.args[0];
    AvoidList avoid;
    if (c.has("avoid")) {
      for (const auto& sname : parse_name_list(c.opt("avoid"))) {
        const PerturbSpace& sp = get_space(s, sname, c);
        avoid.tuples.push_back(sp.components());
      }
    }
    if (mode == "regseq") {
      const auto& f = get_tuple(s, c.args[1], c);
      const PerturbSpace& space = get_space(s, c.opt("space"), c);
      SearchOutcome out =
          perturb_to_regular(std::nullopt, {}, f, module_arg(s, c), space, avoid, cfg);
      j = witness_payload(out, R, cfg.budget);
      j["mode"] = "regseq";
      return j;
    }
    if (mode == "height") {
      const auto& f = get_tuple(s, c.args[1], c);
      const PerturbSpace& space = get_space(s, c.opt("space"), c);
      int target = static_cast<int>(c.opt_int("target", static_cast<long long>(f.size())));
      SearchOutcome out = perturb_to_height(std::nullopt, {}, f, target, space, avoid, cfg);
      j = witness_payload(out, R, cfg.budget);
      j["mode"] = "height";
      return j;
    }
    if (mode == "matrix") {
      const PolyMatrix& m = get_matrix(s, c.args[1], c);
      Ideal J = c.has("ideal") ? get_ideal(s, c.opt("ideal"), c) : power_of_m(R, 1);
      std::string target = c.opt("target", "profile");
      MatrixTarget mt;
      mt.level_r = static_cast<int>(c.opt_int("level", target == "preserve" ? 1 : 0));
      mt.order_q = static_cast<int>(c.opt_int("q", 1));
      if (target == "profile")
        mt.kind = PerturbKind::MatrixProfile;
      else if (target == "injectivity")
        mt.kind = PerturbKind::MatrixInjectivity;
      else if (target == "preserve")
        mt.kind = PerturbKind::MatrixPreserveLow;
      else
        throw ParseError("unknown matrix target '" + target + "'", c.line, c.col);
      SearchOutcome out = perturb_matrix(R, m, J, mt, cfg);
      j = witness_payload(out, R, cfg.budget);
      j["mode"] = "matrix-" + target;
      return j;
    }
    throw ParseError("unknown perturb mode '" + mode + "'", c.line, c.col);
  }
  if (c.name == "stability") {
    need_args(c, 2);
    const std::string mode = c.args[0];
    int maxq = static_cast<int>(c.opt_int("maxq", 4));
    int trials = static_cast<int>(c.opt_int("trials", 20));
    std::uint64_t seed =
        static_cast<std::uint64_t>(c.opt_int("seed", static_cast<long long>(opt.seed)));
    const auto& f = get_tuple(s, c.args[1], c);
    Ideal M = module_arg(s, c);
    auto family = m_power_family(R, f.size());
    std::function<bool(const FreeVec&)> pred;
    if (mode == "regseq") {
      if (!regular_sequence_check(f, M).regular)
        throw domain_error("stability base does not satisfy the predicate");
      pred = [&R, f, M](const FreeVec& g) {
        std::vector<Polynomial> fg = f;
        for (std::size_t i = 0; i < fg.size(); ++i) fg[i] = ring_add(R, fg[i], g.c[i]);
        return regular_sequence_check(fg, M).regular;
      };
    } else if (mode == "height") {
      Ideal base(R, f);
      if (base.is_unit()) throw domain_error("stability base is the unit ideal");
      int h0 = static_cast<int>(c.opt_int("target", height(base).height));
      pred = [&R, f, h0](const FreeVec& g) {
        std::vector<Polynomial> fg = f;
        for (std::size_t i = 0; i < fg.size(); ++i) fg[i] = ring_add(R, fg[i], g.c[i]);
        Ideal I(R, fg);
        if (I.is_unit()) return false;
        return height(I).height >= h0;
      };
    } else if (mode == "koszul") {
      if (!regular_sequence_check(f, M).regular)
        throw domain_error("stability base complex is not exact");
      pred = [&R, f, M](const FreeVec& g) {
        std::vector<Polynomial> fg = f;
        for (std::size_t i = 0; i < fg.size(); ++i) fg[i] = ring_add(R, fg[i], g.c[i]);
        ChainComplex K = koszul_complex(R, fg, M.gens());
        for (int i = 1; i <= K.length(); ++i)
          if (!homology_vanishes(K, i).vanishes) return false;
        return true;
      };
    } else {
      throw ParseError("unknown stability mode '" + mode + "'", c.line, c.col);
    }
    StabilityCurve curve = stability_order_search(family, pred, maxq, trials, seed);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : curve.points) {
      nlohmann::json row;
      row["q"] = pt.q;
      row["trials"] = pt.trials;
      row["failures"] = pt.failures;
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["minimal_stable_q"] = curve.minimal_stable_q;
    return j;
  }
  throw ParseError("unknown command '" + c.name + "'", c.line, c.col);
}

}  // namespace detail

/// Execute one command against a parsed session. Engine errors are tagged
/// with the originating command name.
inline Report run_command(Session& s, const Command& c, const std::string& input_hash,
                          const RunOptions& opt = {}) {
  Report r;
  r.command = print_command(c);
  r.input_sha256 = input_hash;
  r.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.payload = detail::dispatch(s, c, opt);
  } catch (const ParseError&) {
    throw;
  } catch (const engine_error& e) {
    throw engine_error("command '" + c.name + "': " + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

}  // namespace generica

#endif  // GENERICA_COMMANDS_HPP

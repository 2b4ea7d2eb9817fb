// coxeter-om: command-line front end for the coxom library.
//
// Exit codes: 0 success (for verify: every check passes and nothing is
// contaminated), 1 a check or validation failed, 2 bad input.

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "coxom/omclosure.hpp"
#include "coxom/verify.hpp"

using namespace coxom;

namespace {

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_text_file(out, j.dump(2) + "\n");
  }
}

json parse_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("--") + what + ": " + e.what());
  }
}

std::optional<CoxeterMatrix> expected_labels(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return CoxeterMatrix::from_labels(parse_arg(text, "expect").get<std::vector<std::vector<int>>>());
}

int cmd_validate(const std::string& file, const std::string& expect) {
  AnyMatrix m = ngcm_from_json(read_json_file(file));
  auto want = expected_labels(expect);
  return std::visit(
      [&](const auto& c) {
        auto v = validate_ngcm(c, want);
        json viol = json::array();
        for (const auto& x : v.violations) viol.push_back({{"row", x.row}, {"col", x.col}, {"message", x.message}});
        json out{{"ok", v.ok()}, {"tower", tower_of(m)}, {"violations", viol}};
        if (v.ok()) out["coxeter"] = coxeter_to_json(v.ngcm->coxeter);
        emit(out, "");
        return v.ok() ? 0 : 1;
      },
      m);
}

int cmd_symmetrize(const std::string& file) {
  AnyMatrix m = ngcm_from_json(read_json_file(file));
  return std::visit(
      [&](const auto& c) {
        using F = typename std::decay_t<decltype(c)>::value_type;
        auto s = symmetrize_forest(make_ngcm(c));
        emit(json{{"d", vec_to_json(s.d)}, {"ngcm", ngcm_to_json<F>(s.rescaled)}}, "");
        return 0;
      },
      m);
}

int cmd_homotopy(const std::string& fa, const std::string& fb, const std::string& tq, unsigned bits) {
  AnyMatrix ma = ngcm_from_json(read_json_file(fa));
  AnyMatrix mb = ngcm_from_json(read_json_file(fb));
  if (ma.index() != mb.index()) throw Error("homotopy: the two NGCMs use different towers");
  Rational t = Rational::parse(tq);
  return std::visit(
      [&](const auto& a) {
        using F = typename std::decay_t<decltype(a)>::value_type;
        auto na = make_ngcm(a);
        auto nb = make_ngcm(std::get<Matrix<F>>(mb));
        json out{{"t", t.str()}};
        try {
          out["mode"] = "exact";
          out["ngcm"] = ngcm_to_json(ngcm_homotopy(na, nb, t));
        } catch (const TowerError& e) {
          if constexpr (std::is_same_v<F, LaurentPoly>) {
            throw;
          } else {
            PrecisionScope scope(bits);
            out["mode"] = "interval";
            out["reason"] = e.what();
            out["ngcm"] = ngcm_to_json(ngcm_homotopy_interval(na, nb, t));
          }
        }
        emit(out, "");
        return 0;
      },
      ma);
}

int cmd_enumerate(const std::string& file, unsigned depth, const std::string& v, const std::string& out) {
  AnyMatrix m = ngcm_from_json(read_json_file(file));
  std::optional<Rational> vq;
  if (!v.empty()) vq = Rational::parse(v);
  AnySnapshot s = enumerate_any(m, depth, vq);
  return std::visit(
      [&](const auto& snap) {
        ReferenceRealization ref(snap.datum().ngcm().coxeter);
        json j = snapshot_to_json(snap, &ref);
        if (vq) j["v"] = vq->str();
        emit(j, out);
        if (!out.empty()) std::cout << "wrote " << snap.size() << " rays (depth " << depth << ") to " << out << '\n';
        return 0;
      },
      s);
}

template <class F>
json derivation_json(const Derivation<F>& d) {
  json from = json::array(), co = json::array();
  for (Elem e : d.from) from.push_back(elem_to_json(e));
  for (const auto& c : d.coeffs) co.push_back(to_json(c));
  return json{{"elem", elem_to_json(d.elem)}, {"from", from}, {"coeffs", co}};
}

json elems_json(const std::vector<Elem>& v) {
  json out = json::array();
  for (Elem e : v) out.push_back(elem_to_json(e));
  return out;
}

int cmd_closure(const std::string& kind, const std::string& file, const std::string& set) {
  ClosureKind k = parse_closure_kind(kind);
  AnySnapshot s = snapshot_from_json(read_json_file(file));
  auto gamma = elems_from_json(parse_arg(set, "set"));
  return std::visit(
      [&](const auto& snap) {
        auto r = closure(k, gamma, snap);
        json added = json::array();
        for (const auto& d : r.added) added.push_back(derivation_json(d));
        emit(json{{"kind", closure_kind_name(k)},
                  {"input", elems_json(r.input)},
                  {"closed", elems_json(r.closed)},
                  {"added", added},
                  {"contaminated", r.contaminated}},
             "");
        return 0;
      },
      s);
}

int cmd_biclosed(const std::string& kind, const std::string& file, const std::string& set, const std::string& positives) {
  ClosureKind k = parse_closure_kind(kind);
  AnySnapshot s = snapshot_from_json(read_json_file(file));
  auto gamma = elems_from_json(parse_arg(set, "set"));
  return std::visit(
      [&](const auto& snap) {
        std::vector<Elem> y;
        if (positives.empty()) {
          for (std::uint32_t id = 0; id < snap.size(); ++id) y.push_back(pos_elem(id));
        } else {
          y = elems_from_json(parse_arg(positives, "positives"));
        }
        auto r = is_biclosed(k, gamma, y, snap);
        json out{{"kind", closure_kind_name(k)}, {"verdict", verdict_name(r.verdict)}, {"contaminated", r.contaminated}};
        if (r.witness) {
          out["witness"] = derivation_json(*r.witness);
          out["witness"]["side"] = r.complement_side ? "complement" : "set";
        }
        emit(out, "");
        return r.verdict == Verdict::kTrue ? 0 : 1;
      },
      s);
}

int cmd_om_axioms(const std::string& file, const std::string& rays) {
  AnySnapshot s = snapshot_from_json(read_json_file(file));
  return std::visit(
      [&](const auto& snap) {
        using F = std::decay_t<decltype(snap.root(0)[0])>;
        std::vector<std::uint32_t> ids;
        if (rays.empty()) {
          for (std::uint32_t id = 0; id < snap.size(); ++id) ids.push_back(id);
        } else {
          ids = parse_arg(rays, "rays").get<std::vector<std::uint32_t>>();
        }
        if (ids.size() > 10) throw Error("om-axioms: at most 10 rays (20 signed elements); select some with --rays");
        std::vector<Vec<F>> e;
        std::vector<int> star;
        for (std::uint32_t id : ids) {
          if (id >= snap.size()) throw Error("om-axioms: ray " + std::to_string(id) + " not in the snapshot");
          e.push_back(snap.elem_root(pos_elem(id)));
          e.push_back(snap.elem_root(neg_elem(id)));
          star.push_back(static_cast<int>(e.size()) - 1);
          star.push_back(static_cast<int>(e.size()) - 2);
        }
        auto rep = om_axioms_check(star, cone_closure_table(e));
        json viol = json::array();
        for (const auto& v : rep.violations)
          viol.push_back({{"axiom", v.axiom}, {"set", v.set}, {"x", v.x}, {"y", v.y}});
        emit(json{{"rays", ids},
                  {"elements", rep.size},
                  {"checked", rep.checked},
                  {"violation_count", rep.violation_count},
                  {"violations", viol},
                  {"ok", rep.ok()}},
             "");
        return rep.ok() ? 0 : 1;
      },
      s);
}

int cmd_affine_det(int n, const std::string& tuple) {
  std::vector<affine_a::RootIndex> t;
  for (const auto& r : parse_arg(tuple, "tuple")) t.push_back(root_index_from_json(r));
  if (static_cast<int>(t.size()) != n + 1) throw Error("affine-a det: the tuple needs n+1 root indices");
  LaurentPoly p = affine_a::det_roots(t, n);
  auto f = affine_a::factor_det(p);
  json out{{"n", n}, {"det", to_json(p)}, {"det_str", p.str()}, {"factored", factored_to_json(f)}};
  json signs = json::object();
  signs["v<1"] = laurent_sign_at(p, Rational(1, 2));
  signs["v=1"] = laurent_sign_at(p, Rational(1));
  signs["v>1"] = laurent_sign_at(p, Rational(2));
  out["signs"] = signs;
  emit(out, "");
  return 0;
}

int cmd_affine_factor(const std::string& poly) {
  LaurentPoly p = laurent_from_json(parse_arg(poly, "poly"));
  auto f = affine_a::factor_det(p);
  emit(json{{"poly", p.str()}, {"factored", factored_to_json(f)}, {"str", f.str()}}, "");
  return 0;
}

struct VerifyOptions {
  std::string scenario;
  std::string out;
  std::string csv;
  std::string recheck;
  bool timing = false;
  int n = 3;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::string pair = "a2";
  std::string file_a, file_b;
  std::size_t grid = 101;
  int m = 3;
  int n_label = 3;
  std::string cd;
  unsigned depth = 16;
  std::vector<std::string> ngcms;
  unsigned word_length = 6;
};

verify::ScenarioReport run_scenario(const VerifyOptions& o) {
  using namespace verify;
  if (o.scenario == "trichotomy") return run_trichotomy(o.n, o.samples ? o.samples : 200, o.seed);
  if (o.scenario == "rank3-homotopy") {
    HomotopyPair p;
    if (!o.file_a.empty() || !o.file_b.empty()) {
      if (o.file_a.empty() || o.file_b.empty()) throw Error("rank3-homotopy: give both --a and --b");
      p = {"files", as_quad(ngcm_from_json(read_json_file(o.file_a))), as_quad(ngcm_from_json(read_json_file(o.file_b)))};
    } else {
      p = homotopy_preset(o.pair);
    }
    return run_rank3_homotopy(p, o.samples ? o.samples : 100, o.grid, o.seed);
  }
  if (o.scenario == "cd-family") {
    std::vector<std::pair<QuadExt, QuadExt>> cd;
    if (o.cd.empty()) {
      cd = {{QuadExt(2), QuadExt(2)}, {QuadExt(2), QuadExt(3)}, {QuadExt(3), QuadExt(2)}};
    } else {
      for (const auto& x : parse_arg(o.cd, "cd")) cd.emplace_back(quad_from_json(x.at(0)), quad_from_json(x.at(1)));
    }
    return run_cd_family(o.m, o.n_label, cd);
  }
  if (o.scenario == "four-cycle") return run_four_cycle(o.depth);
  if (o.scenario == "forest-uniqueness") {
    std::vector<Matrix<QuadExt>> list;
    for (const auto& f : o.ngcms) list.push_back(as_quad(ngcm_from_json(read_json_file(f))));
    if (list.empty()) list = default_forest_pair();
    return run_forest_uniqueness(list, o.word_length, o.samples ? o.samples : 200, o.seed);
  }
  throw Error("unknown scenario \"" + o.scenario +
              "\" (trichotomy, rank3-homotopy, cd-family, four-cycle, forest-uniqueness)");
}

int cmd_verify(const VerifyOptions& o) {
  if (!o.recheck.empty()) {
    auto failures = verify::recheck(read_json_file(o.recheck));
    for (const auto& f : failures) std::cout << "FAIL " << f << '\n';
    std::cout << (failures.empty() ? "recheck ok" : "recheck failed") << '\n';
    if (o.scenario.empty()) return failures.empty() ? 0 : 1;
    if (!failures.empty()) return 1;
  }
  if (o.scenario.empty()) throw Error("verify: give a scenario or --recheck <report>");
  auto start = std::chrono::steady_clock::now();
  auto rep = run_scenario(o);
  if (o.timing) rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(rep.to_json(), o.out);
  if (!o.csv.empty()) write_text_file(o.csv, rep.csv());
  if (!o.out.empty()) {
    for (const auto& c : rep.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (rep.contaminated) std::cout << "CONTAMINATED " << rep.note << '\n';
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realized root systems of Coxeter groups and their oriented matroids"};
  app.require_subcommand(1);

  std::string file, file2, expect, tq = "1/2", out, v, kind = "cone", set, positives, rays, tuple, poly;
  unsigned depth = 4, bits = 128;
  int n = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate-ngcm", "check an NGCM file and print its Coxeter matrix");
  validate->add_option("file", file, "NGCM JSON")->required();
  validate->add_option("--expect", expect, "expected Coxeter labels as JSON rows (0 = infinity)");

  auto* sym = app.add_subcommand("symmetrize", "rescale a forest NGCM to a symmetric one");
  sym->add_option("file", file, "NGCM JSON")->required();

  auto* hom = app.add_subcommand("homotopy", "point -|c'|^t |c|^(1-t) of the path between two NGCMs");
  hom->add_option("a", file, "first NGCM")->required();
  hom->add_option("b", file2, "second NGCM")->required();
  hom->add_option("--t", tq, "rational t in [0, 1]")->required();
  hom->add_option("--bits", bits, "interval precision when the point is irrational");

  auto* en = app.add_subcommand("enumerate", "enumerate positive roots up to a BFS depth");
  en->add_option("--ngcm", file, "NGCM JSON")->required();
  en->add_option("--depth", depth, "BFS depth")->required();
  en->add_option("--v", v, "value of v for a laurent NGCM");
  en->add_option("--out", out, "snapshot file (default stdout)");

  auto* aff = app.add_subcommand("affine-a", "type A~n determinants and chirotopes");
  aff->require_subcommand(1);
  auto* adet = aff->add_subcommand("det", "determinant of n+1 roots given by index");
  adet->add_option("--n", n, "rank minus one")->required();
  adet->add_option("--tuple", tuple, "JSON list of [eta, m, k, i, j]")->required();
  auto* afac = aff->add_subcommand("factor", "factor a Laurent polynomial as mu v^l (v-1/v)^(m-1) prod c_h");
  afac->add_option("--poly", poly, "{\"exp\": coeff} map")->required();
  auto* atri = aff->add_subcommand("trichotomy", "sampled trichotomy report");
  atri->add_option("--n", n, "rank minus one")->required();
  atri->add_option("--samples", samples, "number of random tuples");
  atri->add_option("--seed", seed, "PRNG seed");
  atri->add_option("--out", out, "report file (default stdout)");

  auto* clo = app.add_subcommand("closure", "cone or 2-closure of a set of snapshot elements");
  auto* bic = app.add_subcommand("biclosed", "is a set of positive rays biclosed in the positives");
  for (auto* c : {clo, bic}) {
    c->add_option("--kind", kind, "cone or two")->required();
    c->add_option("--snapshot", file, "snapshot JSON")->required();
    c->add_option("--set", set, "JSON list of ids, \"+id\"/\"-id\" or {\"id\", \"sign\"}")->required();
  }
  bic->add_option("--positives", positives, "ambient positive set (default all rays)");

  auto* oma = app.add_subcommand("om-axioms", "check the closure axioms on a snapshot restriction");
  oma->add_option("--snapshot", file, "snapshot JSON")->required();
  oma->add_option("--rays", rays, "JSON list of at most 10 ray ids");

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "run a scenario and write a certified report");
  ver->add_option("scenario", vo.scenario,
                  "trichotomy, rank3-homotopy, cd-family, four-cycle or forest-uniqueness");
  ver->add_option("--out", vo.out, "report JSON (default stdout)");
  ver->add_option("--csv", vo.csv, "CSV summary file");
  ver->add_option("--recheck", vo.recheck, "re-verify the certificates of an existing report");
  ver->add_flag("--timing", vo.timing, "record wall time in the report");
  ver->add_option("--n", vo.n, "trichotomy: n");
  ver->add_option("--samples", vo.samples, "number of sampled tuples");
  ver->add_option("--seed", vo.seed, "PRNG seed");
  ver->add_option("--pair", vo.pair, "rank3-homotopy preset: a2, 2-3-inf, 3-4-5");
  ver->add_option("--a", vo.file_a, "rank3-homotopy: first NGCM file");
  ver->add_option("--b", vo.file_b, "rank3-homotopy: second NGCM file");
  ver->add_option("--grid", vo.grid, "rank3-homotopy: grid points");
  ver->add_option("--m", vo.m, "cd-family: label m (0 = infinity)");
  ver->add_option("--n-label", vo.n_label, "cd-family: label n (0 = infinity)");
  ver->add_option("--cd", vo.cd, "cd-family: JSON list of [c, d]");
  ver->add_option("--depth", vo.depth, "four-cycle: enumeration depth");
  ver->add_option("--ngcm", vo.ngcms, "forest-uniqueness: NGCM files");
  ver->add_option("--word-length", vo.word_length, "forest-uniqueness: maximal word length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file, expect);
    if (*sym) return cmd_symmetrize(file);
    if (*hom) return cmd_homotopy(file, file2, tq, bits);
    if (*en) return cmd_enumerate(file, depth, v, out);
    if (*adet) return cmd_affine_det(n, tuple);
    if (*afac) return cmd_affine_factor(poly);
    if (*atri) {
      auto rep = verify::run_trichotomy(n, samples, seed);
      emit(rep.to_json(), out);
      return rep.pass() ? 0 : 1;
    }
    if (*clo) return cmd_closure(kind, file, set);
    if (*bic) return cmd_biclosed(kind, file, set, positives);
    if (*oma) return cmd_om_axioms(file, rays);
    if (*ver) return cmd_verify(vo);
  } catch (const TowerError& e) {
    std::cerr << "error: " << e.what() << " (radicand " << e.radicand() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

// Command-line front end: series computations and verification suites for
// the stable-pair invariants of local curves, with machine-readable output.
//
// stdout carries exactly one JSON document per run (byte-stable for a fixed
// config and seed); a short human-readable summary goes to stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dnh/appendix.hpp"
#include "dnh/gwpt.hpp"
#include "dnh/invariants.hpp"
#include "dnh/json_io.hpp"
#include "dnh/ktheory.hpp"

using namespace dnh;

namespace {

uint64_t default_seed() {
  if (const char* env = std::getenv("DNH_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 1;
}

struct Output {
  Json doc;
  bool all_pass = true;
  std::string summary;

  void add_check(const std::string& name, bool pass,
                 const std::string& detail = "") {
    if (!doc.contains("checks")) doc["checks"] = Json::array();
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    doc["checks"].push_back(c);
    all_pass = all_pass && pass;
  }
};

int finish(Output& out, const std::string& out_path) {
  std::string text = out.doc.dump(2);
  text += "\n";
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text;
  }
  if (!out.summary.empty()) std::fprintf(stderr, "%s\n", out.summary.c_str());
  return out.all_pass ? 0 : 1;
}

std::string ratfn_text(const RatFn& v) { return v.str("s1"); }

// Assembled K-theoretic PT series from the closed refined universal forms.
ShiftedSeries pt_series_ktheory(long d, const LocalCurveGeometry& geom,
                                long order, const Rat& r) {
  ShiftedSeries out;
  out.q = QSeries::zero(order);
  for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
    long f = f_lambda_g(shape, geom.g, geom.k1, geom.k2);
    if (f > order) continue;
    auto triple = universal_closed_ktheory(shape, order - f, r);
    QSeries term = triple.A.pow(geom.g - 1) * triple.B.pow(geom.k1) *
                   triple.C.pow(geom.k2);
    out.q += term.shifted(f);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-pair invariants of local curves via double nested "
               "Hilbert schemes"};
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = default_seed();
  std::string out_path;
  app.add_option("--seed", seed, "random seed (default: $DNH_SEED or 1)");
  app.add_option("--out", out_path, "also write the JSON report to a file");

  // euler-series <lambda> <g> <N>
  std::string lam_str;
  long g = 0, k1 = 0, k2 = 0, order = 6, dmax = 1, degree = 1;
  auto* euler = app.add_subcommand("euler-series",
                                   "Euler characteristic series of the "
                                   "double nested Hilbert schemes");
  euler->add_option("lambda", lam_str, "partition, e.g. 2,1")->required();
  euler->add_option("g", g, "genus")->required();
  euler->add_option("N", order, "truncation order")->required();

  auto* pt = app.add_subcommand("pt-series", "degree-d stable pair series");
  bool mode_full = false, mode_k = false;
  pt->add_option("d", degree)->required();
  pt->add_option("g", g)->required();
  pt->add_option("k1", k1)->required();
  pt->add_option("k2", k2)->required();
  pt->add_option("N", order)->required();
  pt->add_flag("--full", mode_full, "fully equivariant (degree 1 only)");
  pt->add_flag("--k", mode_k, "Nekrasov-Okounkov refinement at t1t2=1");
  pt->add_flag("--antidiagonal", "anti-diagonal restriction (default)");

  auto* uni = app.add_subcommand("universal", "universal series per shape");
  bool u_extract = false, u_closed = false;
  uni->add_option("lambda", lam_str)->required();
  uni->add_option("N", order)->required();
  uni->add_flag("--extract", u_extract, "only the localization extraction");
  uni->add_flag("--closed", u_closed, "only the closed forms");
  uni->add_flag("--compare", "both, cross-checked (default)");
  uni->add_flag("--full", mode_full, "fully equivariant (single box only)");
  uni->add_flag("--k", mode_k, "K-theoretic refinement");
  uni->add_flag("--antidiagonal", "anti-diagonal restriction (default)");

  auto* lead = app.add_subcommand("leading", "size-0 leading term, both routes");
  lead->add_option("lambda", lam_str)->required();
  lead->add_option("g", g)->required();
  lead->add_option("k1", k1)->required();
  lead->add_option("k2", k2)->required();

  auto* gwpt = app.add_subcommand("gw-pt", "GW/PT correspondence check");
  gwpt->add_option("d", degree)->required();
  gwpt->add_option("g", g)->required();
  gwpt->add_option("k1", k1)->required();
  gwpt->add_option("k2", k2)->required();
  gwpt->add_option("N", order, "window width")->required();

  auto* coni = app.add_subcommand("conifold", "resolved conifold product");
  coni->add_option("Dmax", dmax)->required();
  coni->add_option("N", order)->required();

  auto* capp = app.add_subcommand("check-appendix", "combinatorial lemmas");
  long sizemax = 4;
  capp->add_option("sizemax", sizemax)->required();

  auto* call = app.add_subcommand("check-all", "every verification suite");
  bool quick = false;
  call->add_flag("--quick", quick, "reduced bounds, finishes in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (euler->parsed()) {
      Partition shape = parse_partition(lam_str);
      if (order < 0) throw std::invalid_argument("N must be >= 0");
      QSeries s = euler_series(shape, g, order);
      Output out;
      out.doc = report_envelope("euler-series",
                                Json{{"lambda", partition_json(shape)},
                                     {"g", g},
                                     {"N", order}},
                                "exact", seed);
      out.doc["series"] = series_json(s);
      out.summary = s.str("q");
      // oracle: coefficients vs weighted RPP census at g = 0
      if (g == 0 && shape.size() >= 1) {
        QSeries sq = rpp_count_series(shape, order);
        out.add_check("matches_squared_rpp_series",
                      s.equals_through(sq * sq, order));
      }
      return finish(out, out_path);
    }

    if (pt->parsed()) {
      if (degree < 1) throw std::invalid_argument("d must be >= 1");
      if (order < 0) throw std::invalid_argument("N must be >= 0");
      LocalCurveGeometry geom{g, k1, k2};
      Output out;
      if (mode_full) {
        if (degree != 1)
          throw std::invalid_argument(
              "fully equivariant series only in degree 1");
        out.doc = report_envelope("pt-series",
                                  Json{{"d", degree},
                                       {"g", g},
                                       {"k1", k1},
                                       {"k2", k2},
                                       {"N", order}},
                                  "full", seed);
        auto samples = sample_rationals(seed, 6);
        Json runs = Json::array();
        for (int i = 0; i + 1 < static_cast<int>(samples.size()); i += 2) {
          Rat s1 = samples[i], s2 = samples[i + 1];
          if (s1 + s2 == 0) continue;
          auto t = universal_closed_full_deg1<Rat>(order, s1, s2);
          QSeries series =
              (t.A.pow(g - 1) * t.B.pow(k1) * t.C.pow(k2)).shifted(1 - g);
          Json rec;
          rec["s1"] = rat_str(s1);
          rec["s2"] = rat_str(s2);
          rec["series"] = series_json(series);
          runs.push_back(rec);
        }
        out.doc["samples"] = runs;
        out.summary = "degree-1 fully equivariant series at " +
                      std::to_string(runs.size()) + " samples";
      } else if (mode_k) {
        out.doc = report_envelope("pt-series",
                                  Json{{"d", degree},
                                       {"g", g},
                                       {"k1", k1},
                                       {"k2", k2},
                                       {"N", order}},
                                  "k-theoretic", seed);
        auto samples = sample_rationals(seed, 1);
        Rat r = abs(samples[0]) == 1 ? rat_of(5, 3) : samples[0];
        ShiftedSeries s = pt_series_ktheory(degree, geom, order, r);
        out.doc["t1"] = rat_str(r * r);
        out.doc["series"] = series_json(s.q);
        out.summary = s.q.str("q");
        if (degree <= 2 && order <= 4 && g == 0) {
          bool ok = true;
          QSeries direct = QSeries::zero(order);
          for (const Partition& shape :
               enumerate_partitions(static_cast<int>(degree))) {
            long f = f_lambda_g(shape, 0, k1, k2);
            if (f > order) continue;
            QSeries local =
                ktheory_series(shape, P1Gauge(k1, k2), order - f, r);
            direct += local.shifted(f);
          }
          ok = s.q.equals_through(direct, std::min(order, direct.order));
          out.add_check("matches_bracket_localization", ok);
        }
      } else {
        out.doc = report_envelope("pt-series",
                                  Json{{"d", degree},
                                       {"g", g},
                                       {"k1", k1},
                                       {"k2", k2},
                                       {"N", order}},
                                  "antidiagonal", seed);
        ShiftedSeries closed = pt_series_closed(degree, geom, order);
        ShiftedSeries assembled = pt_series_universal(degree, geom, order);
        out.doc["s1_power"] = closed.s1_power;
        out.doc["series"] = series_json(closed.q);
        long through = std::min(closed.q.order, assembled.q.order);
        out.add_check("closed_vs_universal_assembly",
                      closed.q.equals_through(assembled.q, through) &&
                          closed.s1_power == assembled.s1_power);
        out.summary = "s1^" + std::to_string(closed.s1_power) + " * ( " +
                      closed.q.str("q") + " )";
      }
      return finish(out, out_path);
    }

    if (uni->parsed()) {
      Partition shape = parse_partition(lam_str);
      if (order < 0) throw std::invalid_argument("N must be >= 0");
      bool do_extract = u_extract || !u_closed;
      bool do_closed = u_closed || !u_extract;
      Output out;
      std::string mode = mode_full ? "full" : (mode_k ? "k-theoretic"
                                                      : "antidiagonal");
      out.doc = report_envelope(
          "universal",
          Json{{"lambda", partition_json(shape)}, {"N", order}}, mode, seed);
      if (mode_full) {
        if (shape.size() != 1)
          throw std::invalid_argument(
              "fully equivariant closed forms exist for a single box only");
        auto samples = sample_rationals(seed, 6);
        Json runs = Json::array();
        for (int i = 0; i + 1 < static_cast<int>(samples.size()); i += 2) {
          Rat s1 = samples[i], s2 = samples[i + 1];
          if (s1 + s2 == 0 || s1 == s2) continue;
          auto closed = universal_closed_full_deg1<Rat>(order, s1, s2);
          Json rec;
          rec["s1"] = rat_str(s1);
          rec["s2"] = rat_str(s2);
          if (do_closed) {
            rec["A"] = series_json(closed.A);
            rec["B"] = series_json(closed.B);
            rec["C"] = series_json(closed.C);
          }
          if (do_extract) {
            auto ext = universal_extract<Rat>(
                shape, order, CohCtx<Rat>::full(s1, s2), Rat(1) / s2);
            rec["A_extracted"] = series_json(ext.A);
            bool same = ext.A.equals_through(closed.A, order) &&
                        ext.B.equals_through(closed.B, order) &&
                        ext.C.equals_through(closed.C, order);
            out.add_check("extraction_matches_closed@" + rat_str(s1) + "," +
                              rat_str(s2),
                          same);
          }
          runs.push_back(rec);
        }
        out.doc["samples"] = runs;
        out.summary = "single-box fully equivariant universal series";
      } else if (mode_k) {
        auto samples = sample_rationals(seed, 1);
        Rat r = abs(samples[0]) == 1 ? rat_of(5, 3) : samples[0];
        out.doc["t1"] = rat_str(r * r);
        auto closed = universal_closed_ktheory(shape, order, r);
        if (do_closed) {
          out.doc["A"] = series_json(closed.A);
          out.doc["B"] = series_json(closed.B);
          out.doc["C"] = series_json(closed.C);
        }
        if (do_extract) {
          QSeries z1 = ktheory_series(shape, P1Gauge(0, 0), order, r);
          QSeries z2 = ktheory_series(shape, P1Gauge(-1, -1), order, r);
          QSeries z3 = ktheory_series(shape, P1Gauge(0, -2), order, r);
          bool ok =
              z1.equals_through(closed.A.inverse(), order) &&
              z2.equals_through((closed.A * closed.B * closed.C).inverse(),
                                order) &&
              z3.equals_through((closed.A * closed.C * closed.C).inverse(),
                                order);
          out.add_check("bracket_localization_matches_closed", ok);
        }
        out.summary = "K-theoretic universal series at t1=(" + rat_str(r) +
                      ")^2";
      } else {
        RatFn x = RatFn::var();
        auto closed = universal_closed_antidiagonal<RatFn>(shape, order, x);
        if (do_closed) {
          out.doc["A"] = series_json(closed.A);
          out.doc["B"] = series_json(closed.B);
          out.doc["C"] = series_json(closed.C);
          out.summary += "A = " + closed.A.str("q", 12, ratfn_text) + "\n";
          out.summary += "B = " + closed.B.str("q", 12, ratfn_text) + "\n";
          out.summary += "C = " + closed.C.str("q", 12, ratfn_text);
        }
        if (do_extract) {
          if (shape.size() <= 2) {
            auto ext = universal_extract<RatFn>(
                shape, order, symbolic_antidiagonal_ctx(),
                extraction_hint<RatFn>(shape, x));
            out.doc["A_extracted"] = series_json(ext.A);
            out.doc["B_extracted"] = series_json(ext.B);
            out.doc["C_extracted"] = series_json(ext.C);
            bool same = ext.A.equals_through(closed.A, order) &&
                        ext.B.equals_through(closed.B, order) &&
                        ext.C.equals_through(closed.C, order);
            out.add_check("extraction_matches_closed_symbolic", same);
          } else {
            auto samples = sample_rationals(seed, 3);
            for (const Rat& s : samples) {
              auto ext = universal_extract<Rat>(shape, order,
                                                CohCtx<Rat>::antidiag(s),
                                                extraction_hint<Rat>(shape, s));
              auto closed_num =
                  universal_closed_antidiagonal<Rat>(shape, order, s);
              bool same = ext.A.equals_through(closed_num.A, order) &&
                          ext.B.equals_through(closed_num.B, order) &&
                          ext.C.equals_through(closed_num.C, order);
              out.add_check("extraction_matches_closed@s1=" + rat_str(s),
                            same);
            }
          }
        }
      }
      return finish(out, out_path);
    }

    if (lead->parsed()) {
      Partition shape = parse_partition(lam_str);
      RatFn x = RatFn::var();
      RatFn closed = leading_term_closed<RatFn>(shape, g, k1, k2, x);
      RatFn local = leading_term_localized<RatFn>(shape, g, k1, k2, x);
      Output out;
      out.doc = report_envelope("leading",
                                Json{{"lambda", partition_json(shape)},
                                     {"g", g},
                                     {"k1", k1},
                                     {"k2", k2}},
                                "antidiagonal", seed);
      out.doc["closed_form"] = closed.str("s1");
      out.doc["localized"] = local.str("s1");
      out.add_check("routes_agree", closed == local);
      out.summary = "leading term = " + closed.str("s1");
      return finish(out, out_path);
    }

    if (gwpt->parsed()) {
      if (degree < 1 || order < 0)
        throw std::invalid_argument("d >= 1 and N >= 0 required");
      CheckReport rep = gw_pt_check(degree, {g, k1, k2}, order);
      Output out;
      out.doc = report_envelope("gw-pt",
                                Json{{"d", degree},
                                     {"g", g},
                                     {"k1", k1},
                                     {"k2", k2},
                                     {"window", order}},
                                "antidiagonal", seed);
      out.add_check("gw_pt_correspondence", rep.pass, rep.detail);
      out.summary = rep.pass ? "GW/PT correspondence holds on the window"
                             : ("FAIL: " + rep.detail);
      return finish(out, out_path);
    }

    if (coni->parsed()) {
      if (dmax < 0 || order < 0)
        throw std::invalid_argument("Dmax >= 0 and N >= 0 required");
      CheckReport rep = conifold_check(dmax, order);
      Output out;
      out.doc = report_envelope(
          "conifold", Json{{"Dmax", dmax}, {"N", order}}, "exact", seed);
      out.add_check("conifold_product", rep.pass, rep.detail);
      out.summary = rep.pass ? "conifold product identity holds"
                             : ("FAIL: " + rep.detail);
      return finish(out, out_path);
    }

    if (capp->parsed()) {
      if (sizemax < 0) throw std::invalid_argument("sizemax must be >= 0");
      AppendixReport rep = appendix_suite(static_cast<int>(sizemax), -3, 3);
      Output out;
      out.doc = report_envelope("check-appendix", Json{{"sizemax", sizemax}},
                                "exact", seed);
      out.doc["partitions_tested"] = rep.partitions_tested;
      out.add_check("appendix_identities", rep.pass,
                    rep.failures.empty() ? "" : rep.failures.front());
      out.summary = (rep.pass ? "pass, " : "FAIL, ") +
                    std::to_string(rep.partitions_tested) +
                    " partitions tested";
      return finish(out, out_path);
    }

    if (call->parsed()) {
      Output out;
      out.doc = report_envelope("check-all", Json{{"quick", quick}},
                                quick ? "quick" : "full", seed);
      int dm = quick ? 2 : 3;
      int size_cap = quick ? 2 : 3;
      long window = quick ? 5 : 8;

      out.add_check("appendix", appendix_suite(quick ? 5 : 8, -3, 3).pass);

      bool rpp_ok = true;
      for (int d = 1; d <= (quick ? 4 : 5) && rpp_ok; ++d)
        for (const auto& shape : enumerate_partitions(d)) {
          QSeries s = rpp_count_series(shape, quick ? 8 : 12);
          for (long n = 0; n <= (quick ? 8 : 12); ++n)
            if (!(s.coeff(n) ==
                  Rat(static_cast<long>(enumerate_rpps(shape, n).size()))))
              rpp_ok = false;
        }
      out.add_check("rpp_counts", rpp_ok);

      bool cy_ok = true;
      for (int d = 1; d <= size_cap && cy_ok; ++d)
        for (const auto& shape : enumerate_partitions(d))
          for (long sz = 0; sz <= (quick ? 3 : 4); ++sz)
            for (const auto& n : enumerate_rpps(shape, sz))
              for (auto [a, b] : std::vector<std::pair<long, long>>{
                       {-1, -1}, {0, -2}})
                cy_ok = cy_ok && cy_sign_check(n, a, b).pass;
      out.add_check("calabi_yau_signs", cy_ok);

      bool uni_ok = true;
      auto samples = sample_rationals(seed, quick ? 1 : 3);
      for (int d = 1; d <= size_cap && uni_ok; ++d)
        for (const auto& shape : enumerate_partitions(d))
          for (const Rat& s : samples) {
            auto ext = universal_extract<Rat>(shape, quick ? 5 : 8,
                                              CohCtx<Rat>::antidiag(s),
                                              extraction_hint<Rat>(shape, s));
            auto closed =
                universal_closed_antidiagonal<Rat>(shape, quick ? 5 : 8, s);
            uni_ok = uni_ok &&
                     ext.A.equals_through(closed.A, quick ? 5 : 8) &&
                     ext.B.equals_through(closed.B, quick ? 5 : 8) &&
                     ext.C.equals_through(closed.C, quick ? 5 : 8);
          }
      out.add_check("universal_series", uni_ok);

      bool gw_ok = true;
      for (long d = 1; d <= dm && gw_ok; ++d)
        for (long gg = 0; gg <= 2; ++gg)
          for (auto [a, b] : std::vector<std::pair<long, long>>{
                   {0, 0}, {-1, -1}, {0, 2 * gg - 2}})
            gw_ok = gw_ok && gw_pt_check(d, {gg, a, b}, window).pass;
      out.add_check("gw_pt", gw_ok);

      out.add_check("conifold",
                    conifold_check(quick ? 2 : 3, quick ? 6 : 10).pass);

      bool kth_ok = true;
      for (int d = 1; d <= 2 && kth_ok; ++d)
        for (const auto& shape : enumerate_partitions(d)) {
          Rat r = abs(samples[0]) == 1 ? rat_of(5, 3) : samples[0];
          auto closed = universal_closed_ktheory(shape, quick ? 3 : 4, r);
          QSeries z1 = ktheory_series(shape, P1Gauge(0, 0), quick ? 3 : 4, r);
          kth_ok = kth_ok && z1.equals_through(closed.A.inverse(), quick ? 3 : 4);
        }
      out.add_check("ktheory", kth_ok);

      out.summary = out.all_pass ? "all checks passed" : "some checks FAILED";
      return finish(out, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

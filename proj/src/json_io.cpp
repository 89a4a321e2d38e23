#include "dnh/json_io.hpp"

namespace dnh {

Json partition_json(const Partition& p) {
  Json a = Json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

Json rpp_json(const Rpp& r) {
  Json j;
  j["shape"] = partition_json(r.shape());
  Json rows = Json::array();
  for (const auto& row : r.rows()) {
    Json jr = Json::array();
    for (int v : row) jr.push_back(v);
    rows.push_back(jr);
  }
  j["rows"] = rows;
  return j;
}

namespace {

template <class K>
Json series_json_impl(const Series<K>& s, const std::string& var,
                      std::string (*fmt)(const K&)) {
  Json j;
  j["var"] = var;
  j["min_exp"] = s.min_exp;
  j["denominator_of_grid"] = s.grid_den;
  j["order"] = s.order;
  Json coeffs = Json::array();
  for (long i = 0; i < s.size(); ++i) coeffs.push_back(fmt(s.c[i]));
  j["coeffs"] = coeffs;
  return j;
}

std::string rat_fmt(const Rat& r) { return rat_str(r); }
std::string ratfn_fmt(const RatFn& r) { return r.str("s1"); }

}  // namespace

Json series_json(const QSeries& s, const std::string& var) {
  return series_json_impl<Rat>(s, var, &rat_fmt);
}

Json series_json(const Series<RatFn>& s, const std::string& var) {
  return series_json_impl<RatFn>(s, var, &ratfn_fmt);
}

Json virtual_rep_json(const VirtualRep& v) {
  Json arr = Json::array();
  for (auto& [w, m] : v.weights()) {
    Json e;
    Json wj = Json::array();
    for (int k = 0; k < 3; ++k) {
      if (w[k] % 2 == 0)
        wj.push_back(std::to_string(w[k] / 2));
      else
        wj.push_back(std::to_string(w[k]) + "/2");
    }
    e["weight"] = wj;
    e["mult"] = m;
    arr.push_back(e);
  }
  return arr;
}

Json report_envelope(const std::string& operation, Json inputs,
                     const std::string& mode, uint64_t seed) {
  Json j;
  j["schema"] = "dnh-report/1";
  j["operation"] = operation;
  j["inputs"] = std::move(inputs);
  j["mode"] = mode;
  j["seed"] = seed;
  return j;
}

}  // namespace dnh

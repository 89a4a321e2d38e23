#include "dnh/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dnh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

long Partition::size() const {
  long s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(Box b) const {
  return b.i >= 0 && b.i < length() && b.j >= 0 && b.j < parts_[b.i];
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size());
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back({i, j});
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition();
  conj.resize(parts_[0], 0);
  for (int j = 0; j < parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > j) ++count;
    conj[j] = count;
  }
  return Partition(std::move(conj));
}

int Partition::hook(Box b) const {
  if (!contains(b)) throw std::out_of_range("hook: box outside diagram");
  Partition conj = conjugate();
  return parts_[b.i] + conj.parts()[b.j] - b.i - b.j - 1;
}

long Partition::n_stat() const {
  long s = 0;
  for (int i = 0; i < length(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

long Partition::n_conj_stat() const { return conjugate().n_stat(); }

long Partition::total_content() const {
  long s = 0;
  for (Box b : boxes()) s += content(b);
  return s;
}

long Partition::hook_sum() const {
  long s = 0;
  for (int h : hooks()) s += h;
  return s;
}

std::vector<int> Partition::hooks() const {
  Partition conj = conjugate();
  std::vector<int> out;
  out.reserve(size());
  for (Box b : boxes())
    out.push_back(parts_[b.i] + conj.parts()[b.j] - b.i - b.j - 1);
  return out;
}

Rat Partition::hook_product() const {
  Rat p(1);
  for (int h : hooks()) p *= h;
  return p;
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d < 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(d, d, acc, out);
  if (d == 0) out = {Partition()};
  return out;
}

std::pair<int, int> hook_and_content(const Partition& p, Box b) {
  if (!p.contains(b))
    throw std::out_of_range("hook_and_content: box outside diagram");
  return {p.hook(b), p.content(b)};
}

GraphStats graph_stats(const Partition& p) {
  if (p.size() == 0)
    throw std::invalid_argument("graph_stats: empty partition");
  GraphStats g;
  for (Box b : p.boxes()) {
    ++g.vertices;
    if (p.contains({b.i, b.j - 1})) ++g.edges;  // horizontal edge
    if (p.contains({b.i - 1, b.j})) ++g.edges;  // vertical edge
    if (b.i >= 1 && b.j >= 1 && p.contains({b.i - 1, b.j - 1})) ++g.squares;
  }
  return g;
}

long f_lambda_g(const Partition& p, long g, long k1, long k2) {
  return p.size() * (1 - g) - k1 * p.n_stat() - k2 * p.n_conj_stat();
}

Rpp::Rpp(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("rpp: row count does not match shape");
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw std::invalid_argument("rpp: row length does not match shape");
    for (int j = 0; j < shape_.parts()[i]; ++j) {
      if (rows_[i][j] < 0)
        throw std::invalid_argument("rpp: negative entry");
      if (j > 0 && rows_[i][j] < rows_[i][j - 1])
        throw std::invalid_argument("rpp: decreasing along a row");
      if (i > 0 && j < shape_.parts()[i - 1] && rows_[i][j] < rows_[i - 1][j])
        throw std::invalid_argument("rpp: decreasing along a column");
    }
  }
}

long Rpp::total() const {
  long s = 0;
  for (const auto& row : rows_)
    for (int v : row) s += v;
  return s;
}

std::string Rpp::str() const {
  std::string out = "[";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ";";
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rows_[i][j]);
    }
  }
  return out + "]";
}

namespace {

// DFS over row-major entries; prunes on the remaining budget since entries
// are non-negative.
void rpps_rec(const Partition& shape, const std::vector<Box>& bs, size_t idx,
              long remaining, std::vector<std::vector<int>>& rows,
              std::vector<Rpp>& out) {
  if (idx == bs.size()) {
    if (remaining == 0) out.push_back(Rpp(shape, rows));
    return;
  }
  Box b = bs[idx];
  int lo = 0;
  if (b.j > 0) lo = std::max(lo, rows[b.i][b.j - 1]);
  if (b.i > 0 && b.j < shape.parts()[b.i - 1])
    lo = std::max(lo, rows[b.i - 1][b.j]);
  for (long v = lo; v <= remaining; ++v) {
    rows[b.i][b.j] = static_cast<int>(v);
    rpps_rec(shape, bs, idx + 1, remaining - v, rows, out);
  }
  rows[b.i][b.j] = 0;
}

}  // namespace

std::vector<Rpp> enumerate_rpps(const Partition& shape, long n) {
  if (n < 0) return {};
  std::vector<std::vector<int>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape.parts()[i], 0);
  std::vector<Rpp> out;
  if (shape.size() == 0) {
    if (n == 0) out.push_back(Rpp(shape, rows));
    return out;
  }
  auto bs = shape.boxes();
  rpps_rec(shape, bs, 0, n, rows, out);
  return out;
}

QSeries rpp_count_series(const Partition& shape, long order) {
  QSeries s = QSeries::constant(Rat(1), order);
  for (int h : shape.hooks()) s *= one_minus_qh_pow<Rat>(h, -1, order);
  return s;
}

namespace {

void fixed_points_rec(const Rpp& n, const std::vector<Box>& bs, size_t idx,
                      std::vector<std::vector<int>>& a,
                      std::vector<FixedPoint>& out) {
  if (idx == bs.size()) {
    const Partition& shape = n.shape();
    std::vector<std::vector<int>> b(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      b[i].resize(a[i].size());
      for (size_t j = 0; j < a[i].size(); ++j)
        b[i][j] = n.rows()[i][j] - a[i][j];
    }
    out.push_back({Rpp(shape, a), Rpp(shape, b)});
    return;
  }
  Box box = bs[idx];
  const Partition& shape = n.shape();
  // a must increase; b = n - a must increase as well, which caps a's growth
  // by the growth of n.
  int lo = 0, hi = n.entry(box);
  if (box.j > 0) {
    lo = std::max(lo, a[box.i][box.j - 1]);
    hi = std::min(hi, a[box.i][box.j - 1] + n.entry(box) -
                          n.entry({box.i, box.j - 1}));
  }
  if (box.i > 0 && box.j < shape.parts()[box.i - 1]) {
    lo = std::max(lo, a[box.i - 1][box.j]);
    hi = std::min(hi, a[box.i - 1][box.j] + n.entry(box) -
                          n.entry({box.i - 1, box.j}));
  }
  for (int v = lo; v <= hi; ++v) {
    a[box.i][box.j] = v;
    fixed_points_rec(n, bs, idx + 1, a, out);
  }
  a[box.i][box.j] = 0;
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const Rpp& n) {
  std::vector<std::vector<int>> a(n.shape().length());
  for (int i = 0; i < n.shape().length(); ++i)
    a[i].assign(n.shape().parts()[i], 0);
  std::vector<FixedPoint> out;
  if (n.shape().size() == 0) {
    out.push_back({n, n});
    return out;
  }
  auto bs = n.shape().boxes();
  fixed_points_rec(n, bs, 0, a, out);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

Rpp parse_rpp(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<int> entries;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ','))
      if (!tok.empty()) entries.push_back(std::stoi(tok));
    parts.push_back(static_cast<int>(entries.size()));
    rows.push_back(std::move(entries));
  }
  return Rpp(Partition(std::move(parts)), std::move(rows));
}

}  // namespace dnh

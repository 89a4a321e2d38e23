#pragma once

#include <string>
#include <vector>

#include "dnh/series.hpp"

namespace dnh {

struct Box {
  int i = 0;  // row
  int j = 0;  // column
  friend bool operator==(const Box&, const Box&) = default;
};

/// A partition lambda_0 >= lambda_1 >= ... >= 1, possibly empty. Boxes of
/// the Young diagram are the (i,j) with 0 <= j < lambda_i.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long size() const;
  bool contains(Box b) const;
  std::vector<Box> boxes() const;  // row-major order

  Partition conjugate() const;

  int hook(Box b) const;
  int content(Box b) const { return b.j - b.i; }

  long n_stat() const;       // n(lambda) = sum i*lambda_i
  long n_conj_stat() const;  // n(conjugate)
  long total_content() const;
  long hook_sum() const;
  std::vector<int> hooks() const;
  /// Product of all hook lengths.
  Rat hook_product() const;

  std::string str() const;  // "(3,2,1)" or "()"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct GraphStats {
  long vertices = 0;
  long edges = 0;
  long squares = 0;
};

/// All partitions of d, each once, in descending lexicographic order
/// ((4) before (3,1) before (2,2) ...).
std::vector<Partition> enumerate_partitions(int d);

/// Hook length and content of a box, validated against the diagram.
std::pair<int, int> hook_and_content(const Partition& p, Box b);

/// V, E, Q of the diagram graph; requires a non-empty diagram.
GraphStats graph_stats(const Partition& p);

/// f_{lambda,g}(k1,k2) = |lambda|(1-g) - k1*n(lambda) - k2*n(conjugate).
long f_lambda_g(const Partition& p, long g, long k1, long k2);

/// Reversed plane partition: a filling of the diagram by non-negative
/// integers weakly increasing along rows and columns. Entries are validated
/// at construction.
class Rpp {
 public:
  Rpp(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(Box b) const { return rows_[b.i][b.j]; }
  long total() const;

  std::string str() const;  // "[0,1;2]"

  friend bool operator==(const Rpp&, const Rpp&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// All RPPs of the given shape and total n, ordered lexicographically by
/// their row-major entry vector.
std::vector<Rpp> enumerate_rpps(const Partition& shape, long n);

/// Number of RPPs per size as a q-series: must match
/// prod_boxes (1-q^h)^-1.
QSeries rpp_count_series(const Partition& shape, long order);

/// A C^*-fixed point of the double nested Hilbert scheme on P^1: the
/// splitting of every entry into parts supported at 0 and at infinity,
/// each side again weakly increasing.
struct FixedPoint {
  Rpp at_zero;
  Rpp at_infinity;
};

std::vector<FixedPoint> enumerate_fixed_points(const Rpp& n);

Partition parse_partition(const std::string& text);  // "3,2,1" or ""
Rpp parse_rpp(const std::string& text);              // "0,1;2"

}  // namespace dnh

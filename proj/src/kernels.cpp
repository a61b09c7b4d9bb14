#include "eaqmds/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

namespace eaqmds::kernels {

namespace {

struct Support {
  std::size_t begin = 0;
  std::size_t end = 0;  // empty when begin == end
};

std::vector<Support> row_supports(const Matrix& m) {
  std::vector<Support> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    std::size_t b = 0;
    while (b < row.size() && row[b] == Field::zero()) ++b;
    std::size_t e = row.size();
    while (e > b && row[e - 1] == Field::zero()) --e;
    out[r] = {b, e};
  }
  return out;
}

void check_shapes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("multiply_transposed: column counts differ");
}

Elem dot_range(const Field& F, std::span<const Elem> x, std::span<const Elem> y, std::size_t b,
               std::size_t e) {
  Elem acc = Field::zero();
  for (std::size_t j = b; j < e; ++j) acc = F.fma(acc, x[j], y[j]);
  return acc;
}

void solve_free_column(const RowEchelon& ech, std::size_t free_col, std::span<Elem> v) {
  const Field& F = *ech.reduced.field();
  v[free_col] = Field::one();
  for (std::size_t i = ech.rank(); i-- > 0;) {
    const std::size_t pc = ech.pivot_cols[i];
    const auto row = ech.reduced.row(i);
    Elem acc = dot_range(F, row, v, pc + 1, ech.row_end[i]);
    v[pc] = F.neg(acc);
  }
}

std::vector<std::size_t> free_columns(const RowEchelon& ech) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ech.reduced.cols(); ++c) {
    if (next < ech.pivot_cols.size() && ech.pivot_cols[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Echelon basis grown one vector at a time. Each stored vector is reduced
// against the earlier ones and scaled so its pivot entry is 1.
class IncrementalBasis {
 public:
  IncrementalBasis(const Field& F, std::size_t dim, std::size_t capacity)
      : F_(F), dim_(dim), vecs_(capacity * dim), pivots_(capacity) {}

  std::size_t size() const noexcept { return size_; }
  void pop() noexcept { --size_; }

  // Reduces v against the basis; pushes it and returns true when it is new.
  bool try_push(std::span<const Elem> v) {
    Elem* slot = vecs_.data() + size_ * dim_;
    std::copy(v.begin(), v.end(), slot);
    for (std::size_t i = 0; i < size_; ++i) {
      const std::size_t p = pivots_[i];
      if (slot[p] == Field::zero()) continue;
      const Elem f = F_.neg(slot[p]);
      const Elem* b = vecs_.data() + i * dim_;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j] != Field::zero()) slot[j] = F_.fma(slot[j], f, b[j]);
      }
    }
    std::size_t p = 0;
    while (p < dim_ && slot[p] == Field::zero()) ++p;
    if (p == dim_) return false;
    const Elem s = F_.inv(slot[p]);
    for (std::size_t j = p; j < dim_; ++j) slot[j] = F_.mul(slot[j], s);
    pivots_[size_++] = p;
    return true;
  }

 private:
  const Field& F_;
  std::size_t dim_;
  std::vector<Elem> vecs_;
  std::vector<std::size_t> pivots_;
  std::size_t size_ = 0;
};

// Lex-first dependent `weight`-subset whose smallest element is `first`.
std::optional<std::vector<std::size_t>> search_from(const Matrix& cols_as_rows, std::size_t weight,
                                                    std::size_t first) {
  const std::size_t n = cols_as_rows.rows();
  const std::size_t dim = cols_as_rows.cols();
  IncrementalBasis basis(*cols_as_rows.field(), dim, weight);
  std::vector<std::size_t> chosen;
  chosen.reserve(weight);

  auto complete = [&](std::size_t last) {
    std::vector<std::size_t> out = chosen;
    for (std::size_t c = last + 1; out.size() < weight; ++c) out.push_back(c);
    return out;
  };

  chosen.push_back(first);
  if (!basis.try_push(cols_as_rows.row(first))) return complete(first);
  if (weight == 1) return std::nullopt;

  // cursor[d] is the next candidate at depth d (depth = chosen.size()).
  std::vector<std::size_t> cursor(weight + 1, 0);
  cursor[1] = first + 1;
  while (chosen.size() >= 1) {
    const std::size_t depth = chosen.size();
    const std::size_t limit = n - weight + depth + 1;  // exclusive: leave room for the rest
    std::size_t& c = cursor[depth];
    if (c >= limit) {
      if (depth == 1) break;
      chosen.pop_back();
      basis.pop();
      continue;
    }
    const std::size_t col = c++;
    chosen.push_back(col);
    if (!basis.try_push(cols_as_rows.row(col))) return complete(col);
    if (chosen.size() == weight) {
      chosen.pop_back();
      basis.pop();
      continue;
    }
    cursor[depth + 1] = col + 1;
  }
  return std::nullopt;
}

}  // namespace

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  check_shapes(a, b);
  const Field& F = *a.field();
  const auto sa = row_supports(a);
  const auto sb = row_supports(b);
  Matrix out(a.field(), a.rows(), b.rows());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t ri = 0; ri < rows; ++ri) {
    const auto i = static_cast<std::size_t>(ri);
    const auto x = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const std::size_t lo = std::max(sa[i].begin, sb[j].begin);
      const std::size_t hi = std::min(sa[i].end, sb[j].end);
      if (lo < hi) out(i, j) = dot_range(F, x, b.row(j), lo, hi);
    }
  }
  return out;
}

Matrix multiply_transposed_serial(const Matrix& a, const Matrix& b) {
  check_shapes(a, b);
  const Field& F = *a.field();
  Matrix out(a.field(), a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = dot_range(F, a.row(i), b.row(j), 0, a.cols());
  }
  return out;
}

Matrix back_substitute(const RowEchelon& ech) {
  const auto free = free_columns(ech);
  Matrix out(ech.reduced.field(), free.size(), ech.reduced.cols());
  const auto count = static_cast<std::int64_t>(free.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < count; ++k) {
    solve_free_column(ech, free[static_cast<std::size_t>(k)], out.row(static_cast<std::size_t>(k)));
  }
  return out;
}

Matrix back_substitute_serial(const RowEchelon& ech) {
  // No support bounds: every row is scanned to its full width.
  const Field& F = *ech.reduced.field();
  const auto free = free_columns(ech);
  const std::size_t C = ech.reduced.cols();
  Matrix out(ech.reduced.field(), free.size(), C);
  for (std::size_t k = 0; k < free.size(); ++k) {
    auto v = out.row(k);
    v[free[k]] = Field::one();
    for (std::size_t i = ech.rank(); i-- > 0;) {
      const std::size_t pc = ech.pivot_cols[i];
      v[pc] = F.neg(dot_range(F, ech.reduced.row(i), v, pc + 1, C));
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_dependent_columns(const Matrix& h, std::size_t weight) {
  const std::size_t n = h.cols();
  if (weight == 0 || weight > n) return std::nullopt;
  const Matrix cols = h.transpose();
  const std::size_t firsts = n - weight + 1;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::vector<std::optional<std::vector<std::size_t>>> found(firsts);
  const auto count = static_cast<std::int64_t>(firsts);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t fi = 0; fi < count; ++fi) {
    const auto first = static_cast<std::size_t>(fi);
    if (first > best.load(std::memory_order_relaxed)) continue;
    auto hit = search_from(cols, weight, first);
    if (!hit) continue;
    found[first] = std::move(hit);
    std::size_t cur = best.load(std::memory_order_relaxed);
    while (first < cur && !best.compare_exchange_weak(cur, first, std::memory_order_relaxed)) {
    }
  }
  const std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return found[b];
}

std::optional<std::vector<std::size_t>> find_dependent_columns_serial(const Matrix& h,
                                                                      std::size_t weight) {
  const std::size_t n = h.cols();
  if (weight == 0 || weight > n) return std::nullopt;
  std::vector<std::size_t> idx(weight);
  for (std::size_t i = 0; i < weight; ++i) idx[i] = i;
  while (true) {
    if (rank(h.columns(idx)) < weight) return idx;
    std::size_t i = weight;
    while (i > 0 && idx[i - 1] == n - weight + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < weight; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int worker_count() { return omp_get_max_threads(); }

void set_worker_count(int workers) {
  if (workers < 1) throw InvalidInput("worker count must be at least 1");
  omp_set_num_threads(workers);
}

}  // namespace eaqmds::kernels

#include "genset/kernels.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#if defined(GENSET_HAVE_OPENMP)
#include <omp.h>
#endif

namespace genset::kernels {

int max_threads() {
#if defined(GENSET_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void fill_fix_row(const GroupTable& t, std::span<const CosetBlockView> blocks, std::size_t y, BitMatrix& out) {
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.transversal.size(); ++i) {
      const ElementId x = b.transversal[i];
      if (b.subgroup->test(t.mul(t.mul(x, y), t.inv(x)))) out.set(y, b.offset + i);
    }
}

std::vector<std::size_t> renumber(const std::vector<std::size_t>& keys) {
  std::unordered_map<std::size_t, std::size_t> first;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = first.emplace(keys[i], first.size()).first->second;
  return out;
}

// Calls f(and_row) for every multiset of `count` rows (nondecreasing
// positions) whose intersection is nonempty.
template <class F>
void for_each_multiset(const BitMatrix& fix, std::span<const std::size_t> rows, std::size_t count, F&& f) {
  const std::size_t stride = fix.stride();
  std::vector<std::vector<Bits::Word>> acc(count + 1, std::vector<Bits::Word>(stride));
  std::fill(acc[0].begin(), acc[0].end(), ~Bits::Word{0});
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == count) {
      f(std::span<const Bits::Word>(acc[depth]));
      return;
    }
    for (std::size_t k = start; k < rows.size(); ++k) {
      const auto r = fix.row(rows[k]);
      bool any = false;
      for (std::size_t w = 0; w < stride; ++w) {
        acc[depth + 1][w] = acc[depth][w] & r[w];
        any |= acc[depth + 1][w] != 0;
      }
      // Supersets of a generating multiset generate for every x; no split.
      if (!any) continue;
      self(self, depth + 1, k);
    }
  };
  rec(rec, 0, 0);
}

bool disjoint(std::span<const Bits::Word> a, std::span<const Bits::Word> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return false;
  return true;
}

}  // namespace

BitMatrix fix_matrix_serial(const GroupTable& t, std::span<const CosetBlockView> blocks, std::size_t total_degree) {
  BitMatrix out(t.size(), total_degree);
  for (std::size_t y = 0; y < t.size(); ++y) fill_fix_row(t, blocks, y, out);
  return out;
}

BitMatrix fix_matrix_parallel(const GroupTable& t, std::span<const CosetBlockView> blocks, std::size_t total_degree) {
  BitMatrix out(t.size(), total_degree);
  const auto n = static_cast<std::ptrdiff_t>(t.size());
  // Rows occupy disjoint words, so threads never share a write.
#if defined(GENSET_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t y = 0; y < n; ++y) fill_fix_row(t, blocks, static_cast<std::size_t>(y), out);
  return out;
}

BitMatrix generation_matrix_serial(const BitMatrix& fix, std::span<const std::size_t> rows) {
  BitMatrix adj(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (!fix.rows_intersect(rows[i], rows[j])) adj.set(i, j);
  return adj;
}

BitMatrix generation_matrix_parallel(const BitMatrix& fix, std::span<const std::size_t> rows) {
  BitMatrix adj(rows.size(), rows.size());
  const auto m = static_cast<std::ptrdiff_t>(rows.size());
#if defined(GENSET_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::ptrdiff_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (!fix.rows_intersect(rows[static_cast<std::size_t>(i)], rows[j])) adj.set(static_cast<std::size_t>(i), j);
  return adj;
}

std::vector<std::size_t> multiset_signature_classes_serial(const BitMatrix& fix, std::span<const std::size_t> rows,
                                                            std::size_t count) {
  // Split the partition once per multiset.
  std::vector<std::size_t> block(rows.size(), 0);
  std::map<std::pair<std::size_t, bool>, std::size_t> remap;
  for_each_multiset(fix, rows, count, [&](std::span<const Bits::Word> z) {
    remap.clear();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const bool gen = disjoint(fix.row(rows[i]), z);
      block[i] = remap.emplace(std::make_pair(block[i], gen), remap.size()).first->second;
    }
  });
  return renumber(block);
}

std::vector<std::size_t> multiset_signature_classes_parallel(const BitMatrix& fix, std::span<const std::size_t> rows,
                                                              std::size_t count) {
  // Multisets are buffered in chunks; each row's signature over a chunk is
  // computed in parallel, then the partition is refined by (block, signature).
  constexpr std::size_t kChunk = 2048;
  const std::size_t stride = fix.stride();
  const std::size_t m = rows.size();
  std::vector<std::size_t> block(m, 0);
  std::vector<Bits::Word> buffer;
  buffer.reserve(kChunk * stride);
  std::size_t buffered = 0;
  std::vector<Bits> sig(m);

  auto flush = [&] {
    if (!buffered) return;
#if defined(GENSET_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      Bits s(buffered);
      const auto row = fix.row(rows[static_cast<std::size_t>(i)]);
      for (std::size_t z = 0; z < buffered; ++z)
        if (disjoint(row, std::span<const Bits::Word>(buffer.data() + z * stride, stride))) s.set(z);
      sig[static_cast<std::size_t>(i)] = std::move(s);
    }
    std::map<std::pair<std::size_t, Bits>, std::size_t> remap;
    for (std::size_t i = 0; i < m; ++i)
      block[i] = remap.emplace(std::make_pair(block[i], std::move(sig[i])), remap.size()).first->second;
    buffer.clear();
    buffered = 0;
  };
  for_each_multiset(fix, rows, count, [&](std::span<const Bits::Word> z) {
    buffer.insert(buffer.end(), z.begin(), z.end());
    if (++buffered == kChunk) flush();
  });
  flush();
  return renumber(block);
}

}  // namespace genset::kernels

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnomon/factorization.hpp"
#include "gnomon/triple.hpp"

namespace gnomon {

// Two-level total order over the primitive triples: N = S/2 picks the block,
// n is the 1-based rank by ascending t inside it.
struct OrderedIndex {
  i64 N = 0;
  i64 n = 0;

  friend bool operator==(const OrderedIndex&, const OrderedIndex&) = default;
};

struct TableRow {
  OrderedIndex index;
  TripleParams params;
  PrimitiveTriple triple;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// The complete block for one S, ascending t.
inline std::vector<TableRow> block(i64 S) {
  std::vector<TableRow> out;
  try {
    auto pairs = coprime_partitions(S);
    out.reserve(pairs.size());
    i64 n = 1;
    for (auto [t, l] : pairs) {
      TripleParams p{S, t, l};
      out.push_back({{S / 2, n}, p, triple_from_params(p)});
      ++n;
    }
  } catch (const std::overflow_error& err) {
    throw std::overflow_error("S=" + std::to_string(S) + ": " + err.what());
  }
  return out;
}

// Lazy row source over an inclusive even range of S, holding one block at a
// time. Rows come out in strictly increasing (S, t) order.
class RowStream {
 public:
  RowStream(i64 s_min, i64 s_max) : next_s_(s_min), s_max_(s_max) {
    if (s_min < 2 || s_min > s_max || s_min % 2 != 0 || s_max % 2 != 0) {
      throw std::domain_error("enumerate: need even 2 <= s_min <= s_max, got [" +
                              std::to_string(s_min) + ", " + std::to_string(s_max) +
                              "]");
    }
  }

  std::optional<TableRow> next() {
    while (pos_ >= buffer_.size()) {
      if (next_s_ > s_max_) return std::nullopt;
      buffer_ = block(next_s_);
      pos_ = 0;
      next_s_ += 2;
    }
    return buffer_[pos_++];
  }

 private:
  i64 next_s_;
  i64 s_max_;
  std::vector<TableRow> buffer_;
  std::size_t pos_ = 0;
};

inline RowStream enumerate(i64 s_min, i64 s_max) { return RowStream(s_min, s_max); }

enum class TableFormat { tsv, csv, json };

// Write the stream to a sink. tsv/csv carry a header and, matching the usual
// typeset convention, leave S blank on continuation rows of a block unless
// dense is set; json emits one self-contained object per row. Returns the row
// count.
inline i64 emit_table(RowStream& rows, TableFormat format, std::ostream& sink,
                      bool dense = false) {
  i64 count = 0;
  if (format == TableFormat::json) {
    while (auto row = rows.next()) {
      sink << "{\"N\":" << row->index.N << ",\"n\":" << row->index.n
           << ",\"S\":" << row->params.S << ",\"t\":" << row->params.t
           << ",\"l\":" << row->params.l << ",\"x\":" << row->triple.x
           << ",\"y\":" << row->triple.y << ",\"a\":" << row->triple.a << "}\n";
      ++count;
    }
  } else {
    const char sep = format == TableFormat::csv ? ',' : '\t';
    sink << "N.n" << sep << "S" << sep << "t" << sep << "l" << sep << "x" << sep
         << "y" << sep << "a" << "\n";
    while (auto row = rows.next()) {
      sink << row->index.N << '.' << row->index.n << sep;
      if (dense || row->index.n == 1) sink << row->params.S;
      sink << sep << row->params.t << sep << row->params.l << sep << row->triple.x
           << sep << row->triple.y << sep << row->triple.a << "\n";
      ++count;
    }
  }
  if (!sink) {
    throw std::runtime_error("emit_table: sink write failure after " +
                             std::to_string(count) + " rows");
  }
  return count;
}

}  // namespace gnomon

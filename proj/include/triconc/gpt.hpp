#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eigen.hpp"
#include "state.hpp"
#include "tolerances.hpp"

namespace triconc {

// The six index slots of a tripartite density matrix, in canonical order.
// A density matrix entry rho[(a,b,c),(a',b',c')] owns one row slot and one
// column slot per subsystem; a generalized partial transposition moves any
// subset of these slots to the opposite side.
enum class Slot : unsigned {
  a_row = 0,
  a_col = 1,
  b_row = 2,
  b_col = 3,
  c_row = 4,
  c_col = 5,
};

inline constexpr std::size_t kSlotCount = 6;

inline Subsystem slot_subsystem(Slot s) {
  return static_cast<Subsystem>(static_cast<unsigned>(s) / 2);
}
inline bool slot_is_row(Slot s) {
  return static_cast<unsigned>(s) % 2 == 0;
}

// A subset of slots to move across. Applying the same operation twice
// restores the original matrix.
class GptOperation {
 public:
  constexpr GptOperation() = default;

  static constexpr GptOperation from_slots(std::initializer_list<Slot> slots) {
    GptOperation op;
    for (Slot s : slots) op.mask_ |= bit(s);
    return op;
  }

  constexpr GptOperation with(Slot s) const {
    GptOperation op = *this;
    op.mask_ |= bit(s);
    return op;
  }

  constexpr bool contains(Slot s) const { return (mask_ & bit(s)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (unsigned i = 0; i < kSlotCount; ++i)
      if (mask_ & (1u << i)) ++n;
    return n;
  }

  std::vector<Slot> slots() const {
    std::vector<Slot> out;
    for (unsigned i = 0; i < kSlotCount; ++i)
      if (mask_ & (1u << i)) out.push_back(static_cast<Slot>(i));
    return out;
  }

  constexpr bool operator==(const GptOperation&) const = default;

 private:
  static constexpr unsigned bit(Slot s) {
    return 1u << static_cast<unsigned>(s);
  }
  unsigned mask_ = 0;
};

// The nine catalogued operations Y_1..Y_9 (index 0 holds Y_1).
//   Y_1..Y_3: partial transposes of one subsystem (class I),
//   Y_4..Y_6: one column slot joined by the row slots of the other two
//             subsystems (class II),
//   Y_7..Y_9: realignments of a subsystem pair (class III).
inline const std::array<GptOperation, 9>& gpt_catalog() {
  static const std::array<GptOperation, 9> catalog = {
      GptOperation::from_slots({Slot::a_col, Slot::a_row}),
      GptOperation::from_slots({Slot::b_col, Slot::b_row}),
      GptOperation::from_slots({Slot::c_col, Slot::c_row}),
      GptOperation::from_slots({Slot::a_col, Slot::b_row, Slot::c_row}),
      GptOperation::from_slots({Slot::a_col, Slot::b_col, Slot::c_row}),
      GptOperation::from_slots({Slot::a_col, Slot::c_col, Slot::b_row}),
      GptOperation::from_slots({Slot::a_col, Slot::b_row}),
      GptOperation::from_slots({Slot::a_col, Slot::c_row}),
      GptOperation::from_slots({Slot::b_col, Slot::c_row}),
  };
  return catalog;
}

inline GptOperation catalog_op(int k) {
  if (k < 1 || k > 9)
    throw std::invalid_argument("catalog_op: index must be in 1..9");
  return gpt_catalog()[static_cast<std::size_t>(k - 1)];
}

// A (possibly rectangular) matrix produced by moving slots, together with
// the bookkeeping needed to keep applying operations to it. slot_on_rows[i]
// records the current side of slot i; a density matrix starts from
// {row, col, row, col, row, col}.
struct GptImage {
  SystemDims dims;
  std::array<bool, 6> slot_on_rows;
  ComplexMatrix matrix;
};

inline GptImage to_image(const TripartiteState& s) {
  return GptImage{s.dims(), {true, false, true, false, true, false}, s.rho()};
}

namespace detail {

// Linear strides of each slot for a layout whose row index runs over the
// row-side slots in canonical order (and likewise for columns), flattened
// as row * ncols + col.
inline void image_strides(const SystemDims& d,
                          const std::array<bool, 6>& slot_on_rows,
                          std::array<std::size_t, 6>& strides,
                          std::size_t& nrows, std::size_t& ncols) {
  const std::size_t slot_dim[6] = {d.m, d.m, d.n, d.n, d.p, d.p};
  nrows = 1;
  ncols = 1;
  for (std::size_t i = 0; i < kSlotCount; ++i)
    (slot_on_rows[i] ? nrows : ncols) *= slot_dim[i];
  std::size_t row_stride = ncols;
  std::size_t col_stride = 1;
  for (std::size_t i = kSlotCount; i-- > 0;) {
    if (slot_on_rows[i]) {
      strides[i] = row_stride;
      row_stride *= slot_dim[i];
    } else {
      strides[i] = col_stride;
      col_stride *= slot_dim[i];
    }
  }
  // After the loop row_stride == nrows * ncols and col_stride == ncols.
}

} // namespace detail

// Move the slots named by op to the opposite side. Pure data movement; the
// multiset of entries is untouched.
inline GptImage apply_gpt(const GptImage& in, GptOperation op) {
  const SystemDims& d = in.dims;
  const std::size_t slot_dim[6] = {d.m, d.m, d.n, d.n, d.p, d.p};

  GptImage out;
  out.dims = d;
  out.slot_on_rows = in.slot_on_rows;
  for (std::size_t i = 0; i < kSlotCount; ++i)
    if (op.contains(static_cast<Slot>(i)))
      out.slot_on_rows[i] = !out.slot_on_rows[i];

  std::array<std::size_t, 6> sin{}, sout{};
  std::size_t rin, cin, rout, cout;
  detail::image_strides(d, in.slot_on_rows, sin, rin, cin);
  detail::image_strides(d, out.slot_on_rows, sout, rout, cout);
  if (in.matrix.rows() != rin || in.matrix.cols() != cin)
    throw std::invalid_argument("apply_gpt: image shape is inconsistent");

  out.matrix = ComplexMatrix(rout, cout);
  const std::vector<Complex>& src = in.matrix.data();
  std::vector<Complex>& dst = out.matrix.data();
  for (std::size_t v0 = 0, i0 = 0, o0 = 0; v0 < slot_dim[0];
       ++v0, i0 += sin[0], o0 += sout[0])
    for (std::size_t v1 = 0, i1 = i0, o1 = o0; v1 < slot_dim[1];
         ++v1, i1 += sin[1], o1 += sout[1])
      for (std::size_t v2 = 0, i2 = i1, o2 = o1; v2 < slot_dim[2];
           ++v2, i2 += sin[2], o2 += sout[2])
        for (std::size_t v3 = 0, i3 = i2, o3 = o2; v3 < slot_dim[3];
             ++v3, i3 += sin[3], o3 += sout[3])
          for (std::size_t v4 = 0, i4 = i3, o4 = o3; v4 < slot_dim[4];
               ++v4, i4 += sin[4], o4 += sout[4])
            for (std::size_t v5 = 0, i5 = i4, o5 = o4; v5 < slot_dim[5];
                 ++v5, i5 += sin[5], o5 += sout[5])
              dst[o5] = src[i5];
  return out;
}

inline ComplexMatrix apply_gpt(const TripartiteState& s, GptOperation op) {
  return apply_gpt(to_image(s), op).matrix;
}

inline double gpt_norm(const TripartiteState& s, GptOperation op) {
  return trace_norm(apply_gpt(s, op));
}

// Moving all six slots is a plain transpose.
inline bool full_transpose_identity_check(const TripartiteState& s) {
  GptOperation all;
  for (unsigned i = 0; i < kSlotCount; ++i)
    all = all.with(static_cast<Slot>(i));
  const ComplexMatrix image = apply_gpt(s, all);
  return max_abs_diff(image, s.rho().transpose()) <= kTol.entrywise;
}

// Operation names. Catalogue members print as Y1..Y9, the empty operation
// as "identity", anything else as its slot list ("rA,cB,...").
inline std::string slot_label(Slot s) {
  std::string out(slot_is_row(s) ? "r" : "c");
  out += subsystem_letter(slot_subsystem(s));
  return out;
}

inline std::string operation_label(GptOperation op) {
  if (op.empty()) return "identity";
  const auto& catalog = gpt_catalog();
  for (std::size_t k = 0; k < catalog.size(); ++k)
    if (catalog[k] == op) return "Y" + std::to_string(k + 1);
  std::string out;
  for (Slot s : op.slots()) {
    if (!out.empty()) out += ",";
    out += slot_label(s);
  }
  return out;
}

namespace detail {

// One comma-separated token names a side ('r' or 'c') plus one or more
// subsystems ('a', 'b', 'c'), in either order: "cA", "rBC", "Bc". Exactly
// one reading as side + subsystems must exist.
inline std::vector<Slot> parse_slot_token(std::string_view token) {
  std::string t;
  for (char ch : token)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t.size() < 2)
    throw std::invalid_argument("parse_operation: token '" +
                                std::string(token) +
                                "' needs a side and a subsystem");

  std::vector<unsigned> readings; // bitmasks of slots, deduplicated
  for (std::size_t side_pos = 0; side_pos < t.size(); ++side_pos) {
    const char side = t[side_pos];
    if (side != 'r' && side != 'c') continue;
    unsigned mask = 0;
    bool ok = true;
    for (std::size_t i = 0; i < t.size() && ok; ++i) {
      if (i == side_pos) continue;
      const char sub = t[i];
      if (sub != 'a' && sub != 'b' && sub != 'c') {
        ok = false;
        break;
      }
      const unsigned subsystem = static_cast<unsigned>(sub - 'a');
      mask |= 1u << (2 * subsystem + (side == 'r' ? 0 : 1));
    }
    if (!ok) continue;
    bool seen = false;
    for (unsigned r : readings) seen = seen || r == mask;
    if (!seen) readings.push_back(mask);
  }
  if (readings.empty())
    throw std::invalid_argument("parse_operation: cannot read token '" +
                                std::string(token) + "'");
  if (readings.size() > 1)
    throw std::invalid_argument("parse_operation: token '" +
                                std::string(token) + "' is ambiguous");

  std::vector<Slot> out;
  for (unsigned i = 0; i < kSlotCount; ++i)
    if (readings.front() & (1u << i)) out.push_back(static_cast<Slot>(i));
  return out;
}

} // namespace detail

// Accepts "Y1".."Y9" (any case), "identity", or a comma-separated slot list
// such as "cA,rB" / "rBC". Repeated slots collapse; slot order is irrelevant.
inline GptOperation parse_operation(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t.empty())
    throw std::invalid_argument("parse_operation: empty operation name");
  if (t == "identity") return GptOperation();
  if (t.size() == 2 && t[0] == 'y' && t[1] >= '1' && t[1] <= '9')
    return catalog_op(t[1] - '0');

  GptOperation op;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t comma = t.find(',', start);
    const std::string_view token =
        std::string_view(t).substr(start, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - start);
    if (token.empty())
      throw std::invalid_argument("parse_operation: empty token in list");
    for (Slot s : detail::parse_slot_token(token)) op = op.with(s);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return op;
}

// Scan of the nine catalogued norms against the separability threshold
// ||rho^{T_Y}|| <= 1, with `tol` of slack for rounding.
struct NormViolation {
  std::string op;
  double norm;
};

struct EntanglementScan {
  bool entangled = false;
  std::array<double, 9> norms{};
  std::vector<NormViolation> violations;
};

inline EntanglementScan is_gpt_entangled(const TripartiteState& s,
                                         double tol = kTol.norm_agreement) {
  EntanglementScan scan;
  const auto& catalog = gpt_catalog();
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const double norm = gpt_norm(s, catalog[k]);
    scan.norms[k] = norm;
    if (norm > 1.0 + tol)
      scan.violations.push_back({"Y" + std::to_string(k + 1), norm});
  }
  scan.entangled = !scan.violations.empty();
  return scan;
}

} // namespace triconc

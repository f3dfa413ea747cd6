#pragma once

#include "qcf/cf64.hpp"
#include "qcf/eisenstein.hpp"
#include "qcf/rational.hpp"

namespace qcf {

enum class ScalarKind { Rat, EisRat, CF64 };

template <class R>
constexpr ScalarKind scalar_kind();
template <>
constexpr ScalarKind scalar_kind<Rat>() { return ScalarKind::Rat; }
template <>
constexpr ScalarKind scalar_kind<EisRat>() { return ScalarKind::EisRat; }
template <>
constexpr ScalarKind scalar_kind<CF64>() { return ScalarKind::CF64; }

inline const char* to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rat: return "Rat";
    case ScalarKind::EisRat: return "EisRat";
    case ScalarKind::CF64: return "CF64";
  }
  return "?";
}

/// Embedding w -> exp(2 pi i/3).
CF64 to_cf64(const EisRat& x);
inline CF64 to_cf64(const Rat& x) { return CF64(x.to_double()); }

}  // namespace qcf

#pragma once

#include <array>
#include <string>
#include <string_view>

namespace qd {

enum class AnyonKind { phi, sigma };

// The (X, Y) anyon types of an encoded qubit; fixes which braid generators apply.
struct Pairing {
  AnyonKind first;
  AnyonKind second;

  std::string name() const;     // "PhiPhi", "SigmaPhi", ...
  std::string display() const;  // "ΦΦ", "ΣΦ", ...
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

inline constexpr Pairing kPhiPhi{AnyonKind::phi, AnyonKind::phi};
inline constexpr Pairing kSigmaSigma{AnyonKind::sigma, AnyonKind::sigma};
inline constexpr Pairing kSigmaPhi{AnyonKind::sigma, AnyonKind::phi};
inline constexpr Pairing kPhiSigma{AnyonKind::phi, AnyonKind::sigma};

inline constexpr std::array<Pairing, 3> kSingleQubitPairings = {kPhiPhi, kSigmaSigma, kSigmaPhi};
inline constexpr std::array<Pairing, 4> kTwoQubitPairings = {kPhiPhi, kPhiSigma, kSigmaPhi, kSigmaSigma};

// Accepts name(), display(), or two-letter forms such as "PP", "SP".
Pairing parse_pairing(std::string_view text);

}  // namespace qd

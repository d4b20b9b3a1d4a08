#include "fig/fq.hpp"

namespace fig {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateSubspace: return "DegenerateSubspace";
    case Errc::AmbientTooSmall: return "AmbientTooSmall";
    case Errc::UnrealizableHall: return "UnrealizableHall";
    case Errc::NotAFlag: return "NotAFlag";
    case Errc::TypeClash: return "TypeClash";
    case Errc::DiagramPreconditionFailed: return "DiagramPreconditionFailed";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::DomainError: return "DomainError";
    case Errc::IndexTooLarge: return "IndexTooLarge";
    case Errc::NotRepresentatives: return "NotRepresentatives";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NotAChamber: return "NotAChamber";
    case Errc::NotGeometric: return "NotGeometric";
    case Errc::NotIsomorphic: return "NotIsomorphic";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::TransporterNotFound: return "TransporterNotFound";
    case Errc::CaseIIEncountered: return "CaseIIEncountered";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ResidueNotVerified: return "ResidueNotVerified";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool is_odd_prime(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

Fq::Fq(std::int64_t q) : q_(q) {
  if (q >= 2 && q % 2 == 0) fail(Errc::EvenCharacteristic, "q = " + std::to_string(q));
  if (!is_odd_prime(q)) fail(Errc::NonPrime, "q = " + std::to_string(q));
}

std::int64_t Fq::pow(std::int64_t a, std::int64_t e) const {
  a = reduce(a);
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t Fq::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) fail(Errc::ZeroInput, "inverse of 0");
  return pow(a, q_ - 2);
}

bool Fq::is_square(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) fail(Errc::ZeroInput, "square class of 0 is undefined");
  return pow(a, (q_ - 1) / 2) == 1;
}

std::int64_t Fq::sqrt(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) return 0;
  // q stays small throughout this library; a scan is exact and fast enough.
  for (std::int64_t x = 1; x <= (q_ - 1) / 2; ++x)
    if (mul(x, x) == a) return x;
  return -1;
}

std::int64_t Fq::nonsquare() const {
  for (std::int64_t a = 2; a < q_; ++a)
    if (!is_square(a)) return a;
  fail(Errc::DomainError, "no nonsquare found");
}

}  // namespace fig

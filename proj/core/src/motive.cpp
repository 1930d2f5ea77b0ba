#include "roofcalc/motive.hpp"

#include <sstream>
#include <vector>

#include "roofcalc/bundles.hpp"
#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

// Betti numbers b_{2i} of G(k, n) (Gaussian binomial coefficients).
std::vector<long long> grassmannian_betti(int k, int n) {
  const int dim = k * (n - k);
  std::vector<long long> b(static_cast<std::size_t>(dim + 1), 0);
  for (int i = 0; i <= dim; ++i) {
    b[i] = static_cast<long long>(partitions_in_box(i, k, n - k).size());
  }
  return b;
}

EPoly diagonal(const std::vector<long long>& b) {
  EPoly out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int p = static_cast<int>(i);
    out += EPoly::monomial(p, p, b[i]);
  }
  return out;
}

}  // namespace

EPoly EPoly::monomial(int p, int q, BigInt c) {
  EPoly out;
  out.add(p, q, c);
  return out;
}

void EPoly::add(int p, int q, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt EPoly::coeff(int p, int q) const {
  auto it = coeffs_.find({p, q});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt EPoly::euler_characteristic() const {
  BigInt total = 0;
  for (const auto& [pq, c] : coeffs_) total += c;
  return total;
}

EPoly EPoly::swapped() const {
  EPoly out;
  for (const auto& [pq, c] : coeffs_) out.add(pq.second, pq.first, c);
  return out;
}

EPoly EPoly::times_lefschetz(int k) const {
  EPoly out;
  for (const auto& [pq, c] : coeffs_) out.add(pq.first + k, pq.second + k, c);
  return out;
}

std::string EPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pq, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigInt a = c < 0 ? BigInt(-c) : c;
    os << a;
    if (pq.first != 0) os << "*u^" << pq.first;
    if (pq.second != 0) os << "*v^" << pq.second;
  }
  return os.str();
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [pq, c] : o.coeffs_) add(pq.first, pq.second, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  for (const auto& [pq, c] : o.coeffs_) add(pq.first, pq.second, -c);
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [x, ca] : a.coeffs_) {
    for (const auto& [y, cb] : b.coeffs_) {
      out.add(x.first + y.first, x.second + y.second, ca * cb);
    }
  }
  return out;
}

EPoly epoly_grassmannian(int k, int n) {
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::InvalidRank, "G(" + std::to_string(k) + "," +
                                            std::to_string(n) + ")");
  }
  return diagonal(grassmannian_betti(k, n));
}

EPoly epoly_projective(int m) {
  if (m < 0) throw Error(ErrorKind::InvalidRank, "P^m needs m >= 0");
  return diagonal(std::vector<long long>(static_cast<std::size_t>(m + 1), 1));
}

EPoly epoly_flag(int k, int n) {
  return epoly_grassmannian(k + 1, n) * epoly_projective(k);
}

EPoly epoly_of_diamond(const HodgeDiamond& h) {
  EPoly out;
  for (int p = 0; p <= h.dim; ++p) {
    for (int q = 0; q <= h.dim; ++q) {
      const BigInt v = h.value(p, q);
      out += EPoly::monomial(p, q, (p + q) % 2 == 0 ? v : BigInt(-v));
    }
  }
  return out;
}

LeqCheck verify_lemma_leq(int k, int n, const HodgeDiamond& y1,
                          const HodgeDiamond& y2) {
  if (k < 1 || n < k + 2) {
    throw Error(ErrorKind::Precondition,
                "identity needs k >= 1 and n >= k+2");
  }
  EPoly r = epoly_of_diamond(y2).times_lefschetz(k);
  r -= epoly_of_diamond(y1).times_lefschetz(n - k - 1);
  r += epoly_grassmannian(k + 1, n) * epoly_projective(k - 1);
  r -= epoly_grassmannian(k, n) * epoly_projective(n - k - 2);
  LeqCheck out;
  out.pass = r.is_zero();
  out.residual = std::move(r);
  return out;
}

long long derive_b2(int k, int n) {
  if (k < 1 || n < k + 2) {
    throw Error(ErrorKind::Precondition, "derive_b2 needs 1 <= k and k+2 <= n");
  }
  if ((k + 1) * (n - k - 2) <= 2) {
    throw Error(ErrorKind::ExcludedCase,
                "(k+1)(n-k-2) = " + std::to_string((k + 1) * (n - k - 2)) +
                    " <= 2 for k=" + std::to_string(k) +
                    ", n=" + std::to_string(n));
  }
  const auto beta = grassmannian_betti(k + 1, n);
  auto b = [&beta](int i) {
    return i >= 0 && i < static_cast<int>(beta.size()) ? beta[i] : 0LL;
  };
  // P(F) = P(G(k+1, n)) (1 + t + ... + t^k)
  long long flag_b = 0;
  for (int i = 0; i <= k; ++i) flag_b += b(k + 1 - i);
  long long ambient = 0;
  for (int i = 2; i <= k + 1; ++i) ambient += b(i);
  return flag_b - ambient;
}

}  // namespace roofcalc

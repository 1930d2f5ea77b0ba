#include "roofcalc/bundles.hpp"

#include <sstream>
#include <vector>

#include "roofcalc/bwb.hpp"
#include "roofcalc/errors.hpp"

namespace roofcalc {

namespace {

Weight padded(const Weight& lambda, int rank) {
  if (lambda.rank() > rank) {
    for (int i = rank; i < lambda.rank(); ++i) {
      if (lambda[i] != 0) {
        throw Error(ErrorKind::IncompatibleRank,
                    "weight " + lambda.str() + " does not fit rank " +
                        std::to_string(rank));
      }
    }
    return Weight(std::vector<int>(lambda.vec().begin(),
                                   lambda.vec().begin() + rank));
  }
  std::vector<int> out = lambda.vec();
  out.resize(static_cast<std::size_t>(rank), 0);
  return Weight(std::move(out));
}

Weight unit_box(int rank, bool positive, int boxes) {
  std::vector<int> w(static_cast<std::size_t>(rank), 0);
  if (positive) w.front() = boxes;
  else w.back() = -boxes;
  return Weight(std::move(w));
}

Weight column(int rank, bool positive, int height) {
  std::vector<int> w(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < height; ++i) {
    if (positive) w[i] = 1;
    else w[rank - 1 - i] = -1;
  }
  return Weight(std::move(w));
}

// A term of the form L (x) A where L is a line bundle (both blocks
// constant) and A is either trivial or a single box U^vee, U, Q^vee, Q.
struct TwistedAtom {
  int upper_const = 0;
  int lower_const = 0;
  std::optional<Block> box_block;
  bool positive = true;
  int rank = 1;
};

std::optional<std::pair<int, bool>> single_box(const Weight& w) {
  const int r = w.rank();
  if (r < 2) return std::nullopt;
  const int c = w.last();
  bool tail_const = true;
  for (int i = 1; i < r; ++i) tail_const = tail_const && w[i] == c;
  if (tail_const && w.first() == c + 1) return std::pair{c, true};
  const int h = w.first();
  bool head_const = true;
  for (int i = 0; i + 1 < r; ++i) head_const = head_const && w[i] == h;
  if (head_const && w.last() == h - 1) return std::pair{h, false};
  return std::nullopt;
}

std::optional<TwistedAtom> recognize(const DoubleWeight& w) {
  TwistedAtom atom;
  const bool upper_const = w.upper().is_constant();
  const bool lower_const = w.lower().is_constant();
  if (upper_const && lower_const) {
    atom.upper_const = w.upper().first();
    atom.lower_const = w.lower().first();
    return atom;
  }
  if (lower_const) {
    if (auto box = single_box(w.upper())) {
      atom.upper_const = box->first;
      atom.lower_const = w.lower().first();
      atom.box_block = Block::Upper;
      atom.positive = box->second;
      atom.rank = w.k();
      return atom;
    }
  }
  if (upper_const) {
    if (auto box = single_box(w.lower())) {
      atom.upper_const = w.upper().first();
      atom.lower_const = box->first;
      atom.box_block = Block::Lower;
      atom.positive = box->second;
      atom.rank = w.n() - w.k();
      return atom;
    }
  }
  return std::nullopt;
}

// Sym^m (or Wedge^m) of one twisted atom, as a single irreducible label.
std::optional<DoubleWeight> atom_power(const TwistedAtom& a, Ambient amb,
                                       int m, bool wedge) {
  const int k = amb.k;
  const int q = amb.n - amb.k;
  if (wedge && m > a.rank) return std::nullopt;
  Weight upper = Weight::constant(k, m * a.upper_const);
  Weight lower = Weight::constant(q, m * a.lower_const);
  if (a.box_block) {
    const int r = *a.box_block == Block::Upper ? k : q;
    Weight shape = wedge ? column(r, a.positive, m) : unit_box(r, a.positive, m);
    std::vector<int> block =
        (*a.box_block == Block::Upper ? upper : lower).vec();
    for (int i = 0; i < r; ++i) block[i] += shape[i];
    if (*a.box_block == Block::Upper) upper = Weight(std::move(block));
    else lower = Weight(std::move(block));
  }
  return DoubleWeight(std::move(upper), std::move(lower));
}

std::vector<TwistedAtom> summands_as_atoms(const BundleExpr& a,
                                           const char* op) {
  std::vector<TwistedAtom> atoms;
  for (const auto& [w, mult] : a.terms()) {
    auto atom = recognize(w);
    if (!atom) {
      throw Error(ErrorKind::PlethysmRequired,
                  std::string(op) + " of " + w.str() +
                      " needs a plethysm; only twisted U, U^vee, Q, Q^vee "
                      "and line bundles are supported");
    }
    for (BigInt c = 0; c < mult; ++c) atoms.push_back(*atom);
  }
  return atoms;
}

BundleExpr power_of_sum(const std::vector<TwistedAtom>& atoms, Ambient amb,
                        int m, bool wedge) {
  // result[j] = power^j of the sum of atoms[i..]
  std::vector<BundleExpr> tail(static_cast<std::size_t>(m + 1),
                               BundleExpr::zero(amb));
  tail[0] = BundleExpr::trivial(amb);
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    std::vector<BundleExpr> next(static_cast<std::size_t>(m + 1),
                                 BundleExpr::zero(amb));
    for (int j = 0; j <= m; ++j) {
      for (int a = 0; a <= j; ++a) {
        if (tail[j - a].empty()) continue;
        auto piece = atom_power(*it, amb, a, wedge);
        if (!piece) continue;
        next[j] = next[j] + tensor(BundleExpr::irreducible(*piece), tail[j - a]);
      }
    }
    tail = std::move(next);
  }
  return tail[m];
}

}  // namespace

BundleExpr::BundleExpr(Ambient ambient) : ambient_(ambient) {
  if (ambient_.k < 1 || ambient_.k >= ambient_.n) {
    throw Error(ErrorKind::InvalidRank,
                "Grassmannian needs 1 <= k < n, got " + ambient_.str());
  }
}

BundleExpr::BundleExpr(Ambient ambient, Terms terms) : BundleExpr(ambient) {
  for (const auto& [w, m] : terms) add(w, m);
}

BundleExpr BundleExpr::line(Ambient ambient, int t) {
  return irreducible(DoubleWeight(Weight::constant(ambient.k, t),
                                  Weight::zero(ambient.n - ambient.k)));
}

BundleExpr BundleExpr::irreducible(const DoubleWeight& w, BigInt mult) {
  BundleExpr out(w.ambient());
  out.add(w, mult);
  return out;
}

BundleExpr BundleExpr::atom(Ambient amb, const BundleAtomTag& tag) {
  const int k = amb.k;
  const int q = amb.n - amb.k;
  if (k < 1 || k >= amb.n) {
    throw Error(ErrorKind::InvalidRank,
                "Grassmannian needs 1 <= k < n, got " + amb.str());
  }
  Weight upper = Weight::zero(k);
  Weight lower = Weight::zero(q);
  switch (tag.kind) {
    case AtomKind::Udual: upper = unit_box(k, true, 1); break;
    case AtomKind::U: upper = unit_box(k, false, 1); break;
    case AtomKind::Qdual: lower = unit_box(q, true, 1); break;
    case AtomKind::Q: lower = unit_box(q, false, 1); break;
    case AtomKind::Line: break;
    case AtomKind::Schur: {
      if (!tag.lambda || !tag.lambda->is_dominant()) {
        throw Error(ErrorKind::InvalidWeight,
                    "Schur atom needs a non-increasing weight");
      }
      const int r = tag.block == Block::Upper ? k : q;
      Weight lam = padded(*tag.lambda, r);
      if (tag.dual_side) lam = lam.dual();
      if (tag.block == Block::Upper) upper = lam;
      else lower = lam;
      break;
    }
  }
  return irreducible(DoubleWeight(upper.shifted(tag.twist), lower));
}

BundleExpr BundleExpr::atom(Ambient amb, AtomKind kind) {
  BundleAtomTag tag;
  tag.kind = kind;
  return atom(amb, tag);
}

void BundleExpr::require_ambient(const DoubleWeight& w) const {
  if (w.ambient() != ambient_) {
    throw Error(ErrorKind::IncompatibleAmbient,
                "term " + w.str() + " does not live on " + ambient_.str());
  }
}

void BundleExpr::add(const DoubleWeight& w, const BigInt& mult) {
  require_ambient(w);
  if (mult < 0) {
    throw Error(ErrorKind::Precondition, "negative multiplicity");
  }
  if (mult == 0) return;
  terms_[w] += mult;
}

BigInt BundleExpr::rank() const {
  BigInt total = 0;
  for (const auto& [w, m] : terms_) {
    total += m * gl_dimension(w.upper()) * gl_dimension(w.lower());
  }
  return total;
}

bool BundleExpr::globally_generated() const {
  for (const auto& [w, m] : terms_) {
    if (!w.fully_ordered()) return false;
  }
  return true;
}

bool BundleExpr::ample() const {
  for (const auto& [w, m] : terms_) {
    if (w.upper().last() <= w.lower().first()) return false;
  }
  return !terms_.empty();
}

std::string BundleExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto list = [](const Weight& w) {
    std::string s = w.str();
    return "[" + s.substr(1, s.size() - 2) + "]";
  };
  for (const auto& [w, m] : terms_) {
    for (BigInt c = 0; c < m; ++c) {
      if (!first) os << " + ";
      first = false;
      os << "S" << list(w.upper()) << "UD*S" << list(w.lower()) << "QD";
    }
  }
  return os.str();
}

BundleExpr operator+(const BundleExpr& a, const BundleExpr& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::IncompatibleAmbient,
                "direct sum across " + a.ambient().str() + " and " +
                    b.ambient().str());
  }
  BundleExpr out = a;
  for (const auto& [w, m] : b.terms()) out.add(w, m);
  return out;
}

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::IncompatibleAmbient,
                "tensor across " + a.ambient().str() + " and " +
                    b.ambient().str());
  }
  BundleExpr out(a.ambient());
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) {
      for (const auto& [w, c] : lr_double_product(wa, wb)) {
        out.add(w, ma * mb * c);
      }
    }
  }
  return out;
}

BundleExpr operator*(const BundleExpr& a, const BundleExpr& b) {
  return tensor(a, b);
}

BundleExpr dual(const BundleExpr& a) {
  BundleExpr out(a.ambient());
  for (const auto& [w, m] : a.terms()) out.add(w.dual(), m);
  return out;
}

BundleExpr twist(const BundleExpr& a, int t) {
  BundleExpr out(a.ambient());
  for (const auto& [w, m] : a.terms()) out.add(w.twisted(t), m);
  return out;
}

BundleExpr sym_power(const BundleExpr& a, int m) {
  if (m < 0) throw Error(ErrorKind::Precondition, "Sym^m needs m >= 0");
  auto atoms = summands_as_atoms(a, "Sym");
  return power_of_sum(atoms, a.ambient(), m, false);
}

BundleExpr wedge_power(const BundleExpr& a, int m) {
  if (m < 0) throw Error(ErrorKind::Precondition, "Wedge^m needs m >= 0");
  if (m == 0) return BundleExpr::trivial(a.ambient());
  auto atoms = summands_as_atoms(a, "Wedge");
  return power_of_sum(atoms, a.ambient(), m, true);
}

std::vector<std::vector<int>> partitions_in_box(int total, int rows, int cap) {
  std::vector<std::vector<int>> out;
  if (total < 0 || rows < 1) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int bound) -> void {
    if (static_cast<int>(cur.size()) == rows) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int slots = rows - static_cast<int>(cur.size());
    for (int p = std::min(bound, left); p >= 0; --p) {
      if (static_cast<long long>(p) * slots < left) break;
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, cap);
  return out;
}

std::vector<int> conjugate(const std::vector<int>& mu, int length) {
  std::vector<int> out(static_cast<std::size_t>(length), 0);
  for (int i = 0; i < length; ++i) {
    for (int part : mu) {
      if (part > i) ++out[i];
    }
  }
  return out;
}

BundleExpr cotangent_power(int k, int n, int t) {
  const Ambient amb{k, n};
  BundleExpr out(amb);
  if (t < 0 || t > amb.dim()) return out;
  for (const auto& mu : partitions_in_box(t, k, n - k)) {
    out.add(DoubleWeight(Weight(mu).dual(), Weight(conjugate(mu, n - k))), 1);
  }
  return out;
}

BigInt rank(const BundleExpr& a) { return a.rank(); }

}  // namespace roofcalc

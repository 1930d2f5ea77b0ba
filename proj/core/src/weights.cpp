#include "roofcalc/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "roofcalc/errors.hpp"

namespace roofcalc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::InvalidWeight: return "invalid-weight";
    case ErrorKind::NotGloballyGenerated: return "not-globally-generated";
    case ErrorKind::IncompatibleRank: return "incompatible-rank";
    case ErrorKind::IncompatibleAmbient: return "incompatible-ambient";
    case ErrorKind::PlethysmRequired: return "plethysm-required";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Ambiguity: return "ambiguity";
    case ErrorKind::InjectivityViolation: return "injectivity-violation";
    case ErrorKind::ExcludedCase: return "excluded-case";
    case ErrorKind::MalformedContraction: return "malformed-contraction";
    case ErrorKind::UnsupportedRender: return "unsupported-render";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Mismatch: return "mismatch";
  }
  return "unknown";
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorKind::InvalidRank, "weight must have rank >= 1");
  }
}

Weight::Weight(std::initializer_list<int> entries)
    : Weight(std::vector<int>(entries)) {}

Weight Weight::zero(int rank) { return constant(rank, 0); }

Weight Weight::constant(int rank, int value) {
  if (rank < 1) {
    throw Error(ErrorKind::InvalidRank, "weight must have rank >= 1");
  }
  return Weight(std::vector<int>(static_cast<std::size_t>(rank), value));
}

int Weight::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

long long Weight::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool Weight::is_dominant() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool Weight::is_partition() const { return is_dominant() && last() >= 0; }

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int x) { return x == 0; });
}

bool Weight::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](int x) { return x == entries_.front(); });
}

Weight Weight::shifted(int c) const {
  std::vector<int> out = entries_;
  for (int& x : out) x += c;
  return Weight(std::move(out));
}

Weight Weight::dual() const {
  std::vector<int> out(entries_.rbegin(), entries_.rend());
  for (int& x : out) x = -x;
  return Weight(std::move(out));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

std::string Ambient::str() const {
  return "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

DoubleWeight::DoubleWeight(Weight upper, Weight lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (!upper_.is_dominant() || !lower_.is_dominant()) {
    throw Error(ErrorKind::InvalidWeight,
                "double weight blocks must be non-increasing: " + str());
  }
}

std::vector<int> DoubleWeight::concatenated() const {
  std::vector<int> out = upper_.vec();
  out.insert(out.end(), lower_.vec().begin(), lower_.vec().end());
  return out;
}

bool DoubleWeight::fully_ordered() const {
  return upper_.last() >= lower_.first();
}

DoubleWeight DoubleWeight::twisted(int t) const {
  return DoubleWeight(upper_.shifted(t), lower_);
}

DoubleWeight DoubleWeight::dual() const {
  return DoubleWeight(upper_.dual(), lower_.dual());
}

std::string DoubleWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < upper_.rank(); ++i) {
    if (i) os << ',';
    os << upper_[i];
  }
  os << '|';
  for (int i = 0; i < lower_.rank(); ++i) {
    if (i) os << ',';
    os << lower_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void box_rec(int rows, int cap, std::vector<int>& current,
             std::vector<Weight>& out) {
  if (static_cast<int>(current.size()) == rows) {
    out.emplace_back(current);
    return;
  }
  const int bound = current.empty() ? cap : current.back();
  for (int v = bound; v >= 0; --v) {
    current.push_back(v);
    box_rec(rows, cap, current, out);
    current.pop_back();
  }
}

}  // namespace

BoxSet enumerate_box(int rows, int cap) {
  if (rows < 1) {
    throw Error(ErrorKind::InvalidRank, "Box needs at least one row");
  }
  if (cap < 0) {
    throw Error(ErrorKind::Precondition, "Box cap must be non-negative");
  }
  BoxSet box{rows, cap, {}};
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(rows));
  box_rec(rows, cap, current, box.members);
  return box;
}

DoubleWeight bar_move(const DoubleWeight& w) {
  if (w.k() >= w.n() - 1) {
    throw Error(ErrorKind::InvalidRank,
                "bar moving needs k < n - 1, got " + w.ambient().str());
  }
  if (!w.fully_ordered()) {
    throw Error(ErrorKind::NotGloballyGenerated,
                "bar moving needs a fully ordered weight, got " + w.str());
  }
  std::vector<int> upper = w.upper().vec();
  upper.push_back(w.lower().first());
  std::vector<int> lower(w.lower().vec().begin() + 1, w.lower().vec().end());
  return DoubleWeight(Weight(std::move(upper)), Weight(std::move(lower)));
}

DualSchur dual_schur_q(const Weight& lambda) {
  if (!lambda.is_dominant()) {
    throw Error(ErrorKind::InvalidWeight,
                "dual_schur_q needs a dominant weight, got " + lambda.str());
  }
  const int r = lambda.rank();
  std::vector<int> bar(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) bar[j] = lambda.first() - lambda[r - 1 - j];
  return {Weight(std::move(bar)), lambda.first()};
}

namespace {

void render_block(std::ostringstream& os, const Weight& w) {
  for (int v : w.entries()) {
    for (int i = 0; i < v; ++i) os << "[]";
    os << '\n';
  }
}

}  // namespace

std::string render_diagram(const DoubleWeight& w) {
  if (w.upper().min_entry() < 0 || w.lower().min_entry() < 0) {
    throw Error(ErrorKind::UnsupportedRender,
                "cannot draw negative entries: " + w.str());
  }
  if (w.upper().is_zero() && w.lower().is_zero()) return "(empty)\n";
  std::ostringstream os;
  render_block(os, w.upper());
  const int width = std::max({2, 2 * w.upper().first(), 2 * w.lower().first()});
  os << std::string(static_cast<std::size_t>(width), '-') << '\n';
  render_block(os, w.lower());
  return os.str();
}

std::string render_or_numeric(const DoubleWeight& w) {
  try {
    return render_diagram(w);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedRender) throw;
    return w.str() + '\n';
  }
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace roofcalc

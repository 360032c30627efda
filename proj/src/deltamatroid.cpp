#include "mmtp/deltamatroid.hpp"

#include <algorithm>
#include <bit>

#include "mmtp/compose.hpp"
#include "mmtp/transition.hpp"

namespace mmtp {

namespace {

int popcount(std::uint64_t mask) { return std::popcount(mask); }

}  // namespace

DeltaMatroid::DeltaMatroid(std::vector<std::string> ground, std::set<std::uint64_t> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
  if (ground_.size() > 62) throw Error(Errc::malformed, "ground set too large");
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (ground_[i].empty()) throw Error(Errc::malformed, "empty ground element label");
    if (!index_.emplace(ground_[i], i).second)
      throw Error(Errc::malformed, "duplicate ground element '" + ground_[i] + "'");
  }
  if (feasible_.empty()) throw Error(Errc::malformed, "feasible family must be nonempty");
  for (std::uint64_t mask : feasible_)
    if (mask & ~full_mask()) throw Error(Errc::malformed, "feasible set outside the ground set");
}

DeltaMatroid::DeltaMatroid(std::vector<std::string> ground,
                           const std::vector<std::set<std::string>>& feasible)
    : DeltaMatroid(std::move(ground), std::set<std::uint64_t>{0}) {
  feasible_.clear();
  for (const auto& f : feasible) feasible_.insert(mask_of(f));
  if (feasible_.empty()) throw Error(Errc::malformed, "feasible family must be nonempty");
}

std::uint64_t DeltaMatroid::full_mask() const {
  return ground_.empty() ? 0 : (std::uint64_t(1) << ground_.size()) - 1;
}

std::size_t DeltaMatroid::index_of(const std::string& elem) const {
  auto it = index_.find(elem);
  if (it == index_.end()) throw Error(Errc::unknown_element, "no ground element '" + elem + "'");
  return it->second;
}

std::vector<std::set<std::string>> DeltaMatroid::feasible_sets() const {
  std::vector<std::set<std::string>> out;
  for (std::uint64_t mask : feasible_) out.push_back(unmask(mask));
  return out;
}

std::set<std::string> DeltaMatroid::unmask(std::uint64_t mask) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (mask & (std::uint64_t(1) << i)) out.insert(ground_[i]);
  return out;
}

std::uint64_t DeltaMatroid::mask_of(const std::set<std::string>& elems) const {
  std::uint64_t mask = 0;
  for (const std::string& e : elems) mask |= std::uint64_t(1) << index_of(e);
  return mask;
}

AxiomReport DeltaMatroid::validate() const {
  AxiomReport report;
  for (std::uint64_t x : feasible_) {
    for (std::uint64_t y : feasible_) {
      std::uint64_t diff = x ^ y;
      for (std::size_t u = 0; u < ground_.size(); ++u) {
        std::uint64_t ubit = std::uint64_t(1) << u;
        if (!(diff & ubit)) continue;
        bool exchanged = false;
        for (std::size_t v = 0; v < ground_.size() && !exchanged; ++v) {
          std::uint64_t vbit = std::uint64_t(1) << v;
          if (!(diff & vbit)) continue;
          if (feasible_.count(x ^ ubit ^ vbit)) exchanged = true;
        }
        if (!exchanged) {
          report.violations.push_back("symmetric exchange fails for X=" + std::to_string(x) +
                                      " Y=" + std::to_string(y) + " u=" + ground_[u]);
          if (report.violations.size() > 20) return report;
        }
      }
    }
  }
  return report;
}

bool DeltaMatroid::is_even() const {
  int parity = popcount(*feasible_.begin()) % 2;
  return std::all_of(feasible_.begin(), feasible_.end(),
                     [parity](std::uint64_t m) { return popcount(m) % 2 == parity; });
}

bool DeltaMatroid::is_matroid() const {
  int size = popcount(*feasible_.begin());
  return std::all_of(feasible_.begin(), feasible_.end(),
                     [size](std::uint64_t m) { return popcount(m) == size; });
}

bool DeltaMatroid::is_loop(const std::string& elem) const {
  std::uint64_t bit = std::uint64_t(1) << index_of(elem);
  return std::none_of(feasible_.begin(), feasible_.end(), [bit](std::uint64_t m) { return m & bit; });
}

bool DeltaMatroid::is_coloop(const std::string& elem) const {
  std::uint64_t bit = std::uint64_t(1) << index_of(elem);
  return std::all_of(feasible_.begin(), feasible_.end(), [bit](std::uint64_t m) { return m & bit; });
}

bool DeltaMatroid::is_singular(const std::string& elem) const {
  if (is_loop(elem) || is_coloop(elem)) return true;
  std::uint64_t bit = std::uint64_t(1) << index_of(elem);
  return std::all_of(feasible_.begin(), feasible_.end(),
                     [&](std::uint64_t m) { return feasible_.count(m ^ bit) > 0; });
}

DeltaMatroid DeltaMatroid::twist(const std::set<std::string>& subset) const {
  std::uint64_t amask = mask_of(subset);
  std::set<std::uint64_t> twisted;
  for (std::uint64_t m : feasible_) twisted.insert(m ^ amask);
  return DeltaMatroid(ground_, std::move(twisted));
}

DeltaMatroid DeltaMatroid::loop_complement(const std::set<std::string>& subset) const {
  std::set<std::uint64_t> family = feasible_;
  for (const std::string& elem : subset) {
    std::uint64_t bit = std::uint64_t(1) << index_of(elem);
    std::set<std::uint64_t> next = family;
    for (std::uint64_t m : family) {
      if (m & bit) continue;
      std::uint64_t flipped = m | bit;
      if (next.count(flipped))
        next.erase(flipped);
      else
        next.insert(flipped);
    }
    family = std::move(next);
  }
  return DeltaMatroid(ground_, std::move(family));
}

DeltaMatroid DeltaMatroid::star_bar(const std::string& elem) const {
  DeltaMatroid step1 = loop_complement({elem});
  if (!step1.validate().ok())
    throw Error(Errc::not_vf_safe, "loop complement of '" + elem + "' breaks symmetric exchange");
  DeltaMatroid step2 = step1.twist({elem});
  DeltaMatroid step3 = step2.loop_complement({elem});
  if (!step3.validate().ok())
    throw Error(Errc::not_vf_safe, "loop complement of '" + elem + "' breaks symmetric exchange");
  return step3;
}

DeltaMatroid DeltaMatroid::star_bar_set(std::uint64_t mask) const {
  DeltaMatroid out = *this;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (mask & (std::uint64_t(1) << i)) out = out.star_bar(ground_[i]);
  return out;
}

bool DeltaMatroid::is_vf_safe() const {
  if (!validate().ok()) return false;
  std::set<std::set<std::uint64_t>> seen;
  std::vector<DeltaMatroid> queue{*this};
  seen.insert(feasible_);
  while (!queue.empty()) {
    DeltaMatroid current = std::move(queue.back());
    queue.pop_back();
    for (const std::string& e : ground_) {
      for (int op = 0; op < 2; ++op) {
        DeltaMatroid image = op == 0 ? current.twist({e}) : current.loop_complement({e});
        if (seen.count(image.feasible_masks())) continue;
        if (!image.validate().ok()) return false;
        seen.insert(image.feasible_masks());
        queue.push_back(std::move(image));
      }
    }
  }
  return true;
}

DeltaMatroid DeltaMatroid::delete_element(const std::string& elem) const {
  if (is_coloop(elem)) return contract_element(elem);
  std::size_t idx = index_of(elem);
  std::uint64_t bit = std::uint64_t(1) << idx;
  std::uint64_t low = bit - 1;
  std::vector<std::string> ground = ground_;
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(idx));
  std::set<std::uint64_t> family;
  for (std::uint64_t m : feasible_)
    if (!(m & bit)) family.insert((m & low) | ((m >> 1) & ~low));
  return DeltaMatroid(std::move(ground), std::move(family));
}

DeltaMatroid DeltaMatroid::contract_element(const std::string& elem) const {
  if (is_loop(elem)) {
    if (is_coloop(elem)) throw Error(Errc::malformed, "element both loop and coloop");
    return delete_element(elem);
  }
  std::size_t idx = index_of(elem);
  std::uint64_t bit = std::uint64_t(1) << idx;
  std::uint64_t low = bit - 1;
  std::vector<std::string> ground = ground_;
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(idx));
  std::set<std::uint64_t> family;
  for (std::uint64_t m : feasible_)
    if (m & bit) {
      std::uint64_t rest = m & ~bit;
      family.insert((rest & low) | ((rest >> 1) & ~low));
    }
  return DeltaMatroid(std::move(ground), std::move(family));
}

DeltaMatroid DeltaMatroid::delete_elements(const std::set<std::string>& elems) const {
  DeltaMatroid out = *this;
  for (const std::string& e : ground_)
    if (elems.count(e)) out = out.delete_element(e);
  return out;
}

int DeltaMatroid::distance(std::uint64_t mask) const {
  if (mask & ~full_mask()) throw Error(Errc::malformed, "subset outside the ground set");
  int best = static_cast<int>(ground_.size()) + 1;
  for (std::uint64_t f : feasible_) best = std::min(best, popcount(f ^ mask));
  return best;
}

int DeltaMatroid::min_rank() const {
  int best = popcount(*feasible_.begin());
  for (std::uint64_t f : feasible_) best = std::min(best, popcount(f));
  return best;
}

int DeltaMatroid::max_rank() const {
  int best = 0;
  for (std::uint64_t f : feasible_) best = std::max(best, popcount(f));
  return best;
}

Rational DeltaMatroid::sigma() const { return Rational(min_rank() + max_rank(), 2); }

Rational DeltaMatroid::sigma_of(const std::set<std::string>& subset) const {
  std::set<std::string> complement;
  for (const std::string& e : ground_)
    if (!subset.count(e)) complement.insert(e);
  return delete_elements(complement).sigma();
}

bool DeltaMatroid::same_family(const DeltaMatroid& other) const {
  if (ground_.size() != other.ground_.size()) return false;
  std::vector<std::size_t> remap(ground_.size());
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    auto it = other.index_.find(ground_[i]);
    if (it == other.index_.end()) return false;
    remap[i] = it->second;
  }
  std::set<std::uint64_t> theirs_in_my_order;
  for (std::uint64_t m : other.feasible_) {
    std::uint64_t translated = 0;
    for (std::size_t i = 0; i < ground_.size(); ++i)
      if (m & (std::uint64_t(1) << remap[i])) translated |= std::uint64_t(1) << i;
    theirs_in_my_order.insert(translated);
  }
  return feasible_ == theirs_in_my_order;
}

std::string dot_name(const std::string& e) { return e + "_dot"; }
std::string bar_name(const std::string& e) { return e + "_bar"; }
std::string hat_name(const std::string& e) { return e + "_hat"; }

DmIndexing DmIndexing::suffix_scheme(const std::vector<std::string>& ground, std::size_t arity) {
  DmIndexing out;
  for (const std::string& e : ground) {
    std::vector<std::string> names{dot_name(e), bar_name(e)};
    if (arity == 3) names.push_back(hat_name(e));
    out.classes[e] = std::move(names);
  }
  return out;
}

Multimatroid delta_to_z2(const DeltaMatroid& d) {
  std::vector<SkewClass> classes;
  for (const std::string& e : d.ground())
    classes.push_back(SkewClass{e, {dot_name(e), bar_name(e)}, true});
  std::vector<std::set<std::string>> bases;
  for (std::uint64_t mask : d.feasible_masks()) {
    std::set<std::string> basis;
    for (std::size_t i = 0; i < d.ground_size(); ++i) {
      const std::string& e = d.ground()[i];
      basis.insert(mask & (std::uint64_t(1) << i) ? dot_name(e) : bar_name(e));
    }
    bases.push_back(std::move(basis));
  }
  return Multimatroid(Carrier(std::move(classes)), bases);
}

std::optional<Multimatroid> try_delta_to_z3(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  std::vector<SkewClass> classes;
  for (const std::string& e : d.ground())
    classes.push_back(SkewClass{e, {dot_name(e), bar_name(e), hat_name(e)}, true});

  std::vector<std::set<std::string>> bases;
  try {
    for (std::uint64_t zmask = 0; zmask < (std::uint64_t(1) << n); ++zmask) {
      DeltaMatroid twisted = d.star_bar_set(zmask);
      for (std::uint64_t xmask : twisted.feasible_masks()) {
        if (xmask & zmask) continue;  // needs an ordered partition
        std::set<std::string> basis;
        for (std::size_t i = 0; i < n; ++i) {
          const std::string& e = d.ground()[i];
          const std::uint64_t bit = std::uint64_t(1) << i;
          if (xmask & bit)
            basis.insert(dot_name(e));
          else if (zmask & bit)
            basis.insert(hat_name(e));
          else
            basis.insert(bar_name(e));
        }
        bases.push_back(std::move(basis));
      }
    }
  } catch (const Error&) {
    return std::nullopt;  // an intermediate system is not a delta-matroid
  }

  Multimatroid candidate(Carrier(std::move(classes)), bases);
  if (!candidate.check_axioms().ok()) return std::nullopt;
  if (!candidate.is_tight()) return std::nullopt;

  std::set<std::string> dot_bar;
  for (const std::string& e : d.ground()) {
    dot_bar.insert(dot_name(e));
    dot_bar.insert(bar_name(e));
  }
  if (!candidate.restrict_to(dot_bar).equals(delta_to_z2(d))) return std::nullopt;
  return candidate;
}

Multimatroid delta_to_z3(const DeltaMatroid& d) {
  std::optional<Multimatroid> z = try_delta_to_z3(d);
  if (!z) throw Error(Errc::not_vf_safe, "no tight extension; the delta-matroid is not vf-safe");
  return *z;
}

DeltaMatroid delta_from_multimatroid(const Multimatroid& z, const DmIndexing& indexing) {
  std::vector<std::string> ground;
  for (const SkewClass& sc : z.carrier().classes()) {
    bool found = false;
    for (const auto& [label, members] : indexing.classes) {
      if (members.empty()) continue;
      if (z.carrier().has_element(members[0]) &&
          z.carrier().locate(members[0]).first == z.carrier().class_index(sc.name)) {
        ground.push_back(label);
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(Errc::malformed, "indexing does not cover skew class '" + sc.name + "'");
  }

  std::vector<std::set<std::string>> feasible;
  const std::size_t n = ground.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::set<std::string> omega;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& members = indexing.classes.at(ground[i]);
      omega.insert(mask & (std::uint64_t(1) << i) ? members.at(0) : members.at(1));
    }
    if (z.nullity_of(omega) == 0) {
      std::set<std::string> x;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) x.insert(ground[i]);
      feasible.push_back(std::move(x));
    }
  }
  if (feasible.empty()) throw Error(Errc::malformed, "no feasible sets under the given indexing");
  return DeltaMatroid(std::move(ground), feasible);
}

DeltaMatroid delta_from_indexed(const Multimatroid& z) {
  DmIndexing indexing;
  for (const SkewClass& sc : z.carrier().classes()) {
    std::vector<std::string> members{dot_name(sc.name), bar_name(sc.name)};
    for (const std::string& m : members)
      if (!z.carrier().has_element(m))
        throw Error(Errc::malformed, "class '" + sc.name + "' lacks the dot/bar naming");
    indexing.classes[sc.name] = std::move(members);
  }
  return delta_from_multimatroid(z, indexing);
}

namespace {

void require_disjoint_grounds(const DeltaMatroid& d1, const DeltaMatroid& d2) {
  for (const std::string& e : d1.ground())
    for (const std::string& f : d2.ground())
      if (e == f) throw Error(Errc::malformed, "ground sets share the element '" + e + "'");
}

void require_mode(const DeltaMatroid& d1, const DeltaMatroid& d2, DmCompositionMode mode) {
  if (mode == DmCompositionMode::even) {
    if (!d1.is_even() || !d2.is_even())
      throw Error(Errc::mode_hypothesis, "even-mode composition needs even delta-matroids");
  } else {
    if (!d1.is_vf_safe() || !d2.is_vf_safe())
      throw Error(Errc::mode_hypothesis, "vf-safe-mode composition needs vf-safe delta-matroids");
  }
}

Multimatroid lift(const DeltaMatroid& d, DmCompositionMode mode) {
  return mode == DmCompositionMode::even ? delta_to_z2(d) : delta_to_z3(d);
}

// b_dot@a -> b@a_dot, matching the ground naming b@a of composite copies
Multimatroid normalise_copy_names(const Multimatroid& z) {
  auto fix = [](const std::string& name) {
    auto at = name.find('@');
    if (at == std::string::npos) return name;
    std::string head = name.substr(0, at);
    std::string tag = name.substr(at + 1);
    for (const char* suffix : {"_dot", "_bar", "_hat"}) {
      if (head.size() > std::strlen(suffix) && head.ends_with(suffix)) {
        std::string base = head.substr(0, head.size() - std::strlen(suffix));
        return base + "@" + tag + suffix;
      }
    }
    return name;
  };
  std::vector<SkewClass> classes;
  for (const SkewClass& sc : z.carrier().classes()) {
    SkewClass fresh = sc;
    for (std::string& e : fresh.elems) e = fix(e);
    classes.push_back(std::move(fresh));
  }
  std::vector<std::set<std::string>> bases;
  for (const auto& basis : z.basis_sets()) {
    std::set<std::string> fresh;
    for (const std::string& e : basis) fresh.insert(fix(e));
    bases.push_back(std::move(fresh));
  }
  return Multimatroid(Carrier(std::move(classes)), bases);
}

}  // namespace

DeltaMatroid delta_two_sum(const DeltaMatroid& d1, const std::string& f, const DeltaMatroid& d2,
                           const std::string& e, DmCompositionMode mode) {
  require_disjoint_grounds(d1, d2);
  require_mode(d1, d2, mode);
  if (d1.is_singular(f)) throw Error(Errc::singular_element, "'" + f + "' is singular");
  if (d2.is_singular(e)) throw Error(Errc::singular_element, "'" + e + "' is singular");
  Multimatroid sum = two_sum(lift(d1, mode), f, lift(d2, mode), e);
  return delta_from_indexed(sum);
}

DeltaMatroid delta_tensor(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e,
                          DmCompositionMode mode) {
  require_disjoint_grounds(d1, d2);
  require_mode(d1, d2, mode);
  for (const std::string& f : d1.ground())
    if (d1.is_singular(f))
      throw Error(Errc::singular_element, "left factor has the singular element '" + f + "'");
  if (d2.is_singular(e)) throw Error(Errc::singular_element, "'" + e + "' is singular");
  TensorResult tensor = tensor_product(lift(d1, mode), lift(d2, mode), e);
  return delta_from_indexed(normalise_copy_names(tensor.product));
}

MultiPoly delta_transition_multi(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  MultiPoly total;
  for (std::uint64_t zmask = 0; zmask < (std::uint64_t(1) << n); ++zmask) {
    DeltaMatroid twisted = d.star_bar_set(zmask);
    for (std::uint64_t xmask = 0; xmask < (std::uint64_t(1) << n); ++xmask) {
      if (xmask & zmask) continue;
      Monomial mono = Monomial::variable("t", 2 * twisted.distance(xmask));
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << i;
        const std::string& e = d.ground()[i];
        if (xmask & bit)
          mono = mono.times(Monomial::variable("u." + e));
        else if (zmask & bit)
          mono = mono.times(Monomial::variable("w." + e));
        else
          mono = mono.times(Monomial::variable("v." + e));
      }
      total += MultiPoly::term(mono, 1);
    }
  }
  return total;
}

MultiPoly delta_transition_two(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  MultiPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Monomial mono = Monomial::variable("t", 2 * d.distance(mask));
    mono = mono.times(Monomial::variable("w", 2 * static_cast<int>(n - std::size_t(popcount(mask)))));
    mono = mono.times(Monomial::variable("x", 2 * popcount(mask)));
    total += MultiPoly::term(mono, 1);
  }
  return total;
}

namespace {

// doubled sigma of the restriction to `keep`
int sigma2_of_mask(const DeltaMatroid& d, std::uint64_t keep) {
  DeltaMatroid restricted = d.delete_elements(d.unmask(d.mask_of(d.unmask(~keep & ((std::uint64_t(1) << d.ground_size()) - 1)))));
  return restricted.min_rank() + restricted.max_rank();
}

}  // namespace

MultiPoly delta_tutte(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  const int sigma2_full = d.min_rank() + d.max_rank();
  std::vector<int> sigma2(std::size_t(1) << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    sigma2[mask] = sigma2_of_mask(d, mask);

  bool integral = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    if ((sigma2_full - sigma2[mask]) % 2 != 0 || (2 * popcount(mask) - sigma2[mask]) % 2 != 0)
      integral = false;

  MultiPoly total;
  if (integral) {
    const MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::one();
    const MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::one();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      int ex = (sigma2_full - sigma2[mask]) / 2;
      int ey = (2 * popcount(mask) - sigma2[mask]) / 2;
      total += xm1.pow(static_cast<unsigned>(ex)) * ym1.pow(static_cast<unsigned>(ey));
    }
    return total;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Monomial mono = Monomial::variable("xm1", sigma2_full - sigma2[mask])
                        .times(Monomial::variable("ym1", 2 * popcount(mask) - sigma2[mask]));
    total += MultiPoly::term(mono, 1);
  }
  return total;
}

int matroid_rank(const DeltaMatroid& m, std::uint64_t mask) {
  int best = 0;
  for (std::uint64_t basis : m.feasible_masks()) best = std::max(best, popcount(basis & mask));
  return best;
}

MultiPoly matroid_tutte(const DeltaMatroid& m) {
  if (!m.is_matroid()) throw Error(Errc::hypothesis, "Tutte polynomial needs a matroid");
  const std::size_t n = m.ground_size();
  const int full = matroid_rank(m, (std::uint64_t(1) << n) - 1);
  const MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::one();
  const MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::one();
  MultiPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int r = matroid_rank(m, mask);
    total += xm1.pow(static_cast<unsigned>(full - r)) * ym1.pow(static_cast<unsigned>(popcount(mask) - r));
  }
  return total;
}

MultiPoly delta_tutte_square_form(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  const int sigma2_full = d.min_rank() + d.max_rank();
  MultiPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int s2 = sigma2_of_mask(d, mask);
    int s_exp = static_cast<int>(n) - d.max_rank() + sigma2_full - s2;
    int u_exp = d.min_rank() + 2 * popcount(mask) - s2;
    total += MultiPoly::term(
        Monomial::variable("s", 2 * s_exp).times(Monomial::variable("u", 2 * u_exp)), 1);
  }
  return total;
}

MultiPoly delta_transition_square_form(const DeltaMatroid& d) {
  const std::size_t n = d.ground_size();
  MultiPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int dist = d.distance(mask);
    int s_exp = static_cast<int>(n) - popcount(mask) + dist;
    int u_exp = popcount(mask) + dist;
    total += MultiPoly::term(
        Monomial::variable("s", 2 * s_exp).times(Monomial::variable("u", 2 * u_exp)), 1);
  }
  return total;
}

namespace {

WeightMap z2_weights(const DeltaMatroid& d) {
  WeightMap weights;
  for (const std::string& e : d.ground()) {
    weights[dot_name(e)] = std::string("x");
    weights[bar_name(e)] = std::string("w");
  }
  return weights;
}

void require_tensor_hypotheses(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e) {
  for (const std::string& f : d1.ground())
    if (d1.is_singular(f))
      throw Error(Errc::singular_element, "left factor has the singular element '" + f + "'");
  if (d2.is_singular(e)) throw Error(Errc::singular_element, "'" + e + "' is singular");
}

}  // namespace

bool verify_delta_tensor_multi(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e) {
  require_tensor_hypotheses(d1, d2, e);
  if (!d1.is_vf_safe() || !d2.is_vf_safe())
    throw Error(Errc::mode_hypothesis, "the multivariate identity needs vf-safe inputs");

  // p, q, r from the slack sums of the induced tight 3-matroid, translated to
  // the u/v/w variables of the factor
  Multimatroid z2 = delta_to_z3(d2);
  std::vector<MultiPoly> ys = slack_sums(z2, e);
  std::map<std::string, std::string> to_uvw;
  for (const std::string& b : d2.ground()) {
    if (b == e) continue;
    to_uvw[weight_variable(dot_name(b))] = "u." + b;
    to_uvw[weight_variable(bar_name(b))] = "v." + b;
    to_uvw[weight_variable(hat_name(b))] = "w." + b;
  }
  MultiPoly p = ys[0].rename(to_uvw);
  MultiPoly q = ys[1].rename(to_uvw);
  MultiPoly r = ys[2].rename(to_uvw);

  // the linear system pins p, q, r
  const MultiPoly t = MultiPoly::variable("t");
  if (delta_transition_multi(d2.contract_element(e)) != t * p + q + r) return false;
  if (delta_transition_multi(d2.delete_element(e)) != p + t * q + r) return false;
  if (delta_transition_multi(d2.loop_complement({e}).contract_element(e)) != p + q + t * r)
    return false;

  std::map<std::string, MultiPoly> substitution;
  for (const std::string& a : d1.ground()) {
    std::map<std::string, std::string> to_copy;
    for (const std::string& b : d2.ground()) {
      if (b == e) continue;
      to_copy["u." + b] = "u." + b + "@" + a;
      to_copy["v." + b] = "v." + b + "@" + a;
      to_copy["w." + b] = "w." + b + "@" + a;
    }
    substitution["u." + a] = p.rename(to_copy);
    substitution["v." + a] = q.rename(to_copy);
    substitution["w." + a] = r.rename(to_copy);
  }
  MultiPoly rhs = delta_transition_multi(d1).substitute(substitution);
  MultiPoly lhs = delta_transition_multi(delta_tensor(d1, d2, e, DmCompositionMode::vf_safe));
  return lhs == rhs;
}

bool verify_delta_tensor_two(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e) {
  require_tensor_hypotheses(d1, d2, e);
  if (!d1.is_even() || !d2.is_even())
    throw Error(Errc::mode_hypothesis, "the two-variable identity needs even inputs");

  std::vector<MultiPoly> ys = slack_sums(delta_to_z2(d2), e, z2_weights(d2));
  const MultiPoly& p = ys[0];  // slack at the dot member
  const MultiPoly& q = ys[1];

  const MultiPoly t = MultiPoly::variable("t");
  if (delta_transition_two(d2.contract_element(e)) != t * p + q) return false;
  if (delta_transition_two(d2.delete_element(e)) != p + t * q) return false;

  MultiPoly rhs = delta_transition_two(d1).substitute({{"x", p}, {"w", q}});
  MultiPoly lhs = delta_transition_two(delta_tensor(d1, d2, e, DmCompositionMode::even));
  return lhs == rhs;
}

namespace {

// R(D; v+1, w+1) by direct subset expansion; exponents are doubled sigma
// differences, so this stays exact for even inputs at any rational point.
Rational tutte_r_shifted_eval(const DeltaMatroid& d, const Rational& sqrt_x, const Rational& sqrt_y) {
  const std::size_t n = d.ground_size();
  const int sigma2_full = d.min_rank() + d.max_rank();
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int s2 = sigma2_of_mask(d, mask);
    total += rational_pow(sqrt_x, sigma2_full - s2) * rational_pow(sqrt_y, 2 * popcount(mask) - s2);
  }
  return total;
}

Rational tutte_r_eval(const DeltaMatroid& d, const Rational& xm1, const Rational& ym1) {
  const std::size_t n = d.ground_size();
  const int sigma2_full = d.min_rank() + d.max_rank();
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int s2 = sigma2_of_mask(d, mask);
    if ((sigma2_full - s2) % 2 != 0 || (2 * popcount(mask) - s2) % 2 != 0)
      throw Error(Errc::hypothesis, "half-integral exponents; only even inputs are supported here");
    total += rational_pow(xm1, (sigma2_full - s2) / 2) * rational_pow(ym1, (2 * popcount(mask) - s2) / 2);
  }
  return total;
}

Rational matroid_tutte_eval(const DeltaMatroid& m, const Rational& x, const Rational& y) {
  const std::size_t n = m.ground_size();
  const int full = matroid_rank(m, (std::uint64_t(1) << n) - 1);
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int r = matroid_rank(m, mask);
    total += rational_pow(x - 1, full - r) * rational_pow(y - 1, popcount(mask) - r);
  }
  return total;
}

const std::vector<std::pair<Rational, Rational>>& sample_points() {
  static const std::vector<std::pair<Rational, Rational>> points = [] {
    std::vector<std::pair<Rational, Rational>> out;
    const Rational values[] = {Rational(2),     Rational(3),     Rational(5, 2), Rational(7, 3),
                               Rational(4, 3),  Rational(5),     Rational(7, 2), Rational(8, 3),
                               Rational(11, 4), Rational(13, 5), Rational(6),    Rational(9, 2)};
    for (const Rational& a : values)
      for (const Rational& b : values) out.emplace_back(a, b);
    return out;
  }();
  return points;
}

}  // namespace

bool verify_delta_tensor_tutte(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e,
                               int min_points) {
  require_tensor_hypotheses(d1, d2, e);
  if (!d1.is_even() || !d2.is_even())
    throw Error(Errc::hypothesis, "the Tutte identity is only supported for even inputs");

  DeltaMatroid composite = delta_tensor(d1, d2, e, DmCompositionMode::even);
  DeltaMatroid contracted = d2.contract_element(e);
  DeltaMatroid deleted = d2.delete_element(e);

  const int e2 = static_cast<int>(d2.ground_size());
  const int e_total = static_cast<int>(composite.ground_size());
  const int sigma2_d1 = d1.min_rank() + d1.max_rank();
  if (sigma2_d1 % 2 != 0) throw Error(Errc::hypothesis, "half-integral sigma on an even input");

  int checked = 0;
  for (const auto& [s, u] : sample_points()) {
    if (checked >= min_points) break;
    const Rational su = s * u;
    if (su == 1 || su == -1) continue;

    // p, q from the linear system scaled by the prefactors of each minor
    Rational a1 = tutte_r_shifted_eval(contracted, s, u) /
                  (rational_pow(s, contracted.max_rank() - e2 + 1) *
                   rational_pow(u, -contracted.min_rank()));
    Rational a2 = tutte_r_shifted_eval(deleted, s, u) /
                  (rational_pow(s, deleted.max_rank() - e2 + 1) * rational_pow(u, -deleted.min_rank()));
    // su*p + q = a1, p + su*q = a2
    Rational det = su * su - 1;
    Rational p = (su * a1 - a2) / det;
    Rational q = (su * a2 - a1) / det;
    if (p == 0 || q == 0) continue;

    Rational lhs = tutte_r_shifted_eval(composite, s, u);
    Rational rhs = rational_pow(q, static_cast<long>(d1.ground_size())) *
                   rational_pow(p / (q * su), sigma2_d1 / 2) *
                   rational_pow(s, composite.min_rank() + composite.max_rank() - e_total) *
                   rational_pow(su, d1.min_rank() - composite.min_rank()) *
                   tutte_r_eval(d1, q * su / p, p * su / q);
    if (lhs != rhs) return false;
    ++checked;
  }
  if (checked < min_points)
    throw Error(Errc::hypothesis, "not enough admissible sample points");
  return true;
}

bool verify_matroid_tensor_tutte(const DeltaMatroid& m1, const DeltaMatroid& m2, const std::string& e,
                                 int min_points) {
  if (!m1.is_matroid() || !m2.is_matroid())
    throw Error(Errc::hypothesis, "matroid inputs required");
  for (const std::string& f : m1.ground())
    if (m1.is_loop(f) || m1.is_coloop(f))
      throw Error(Errc::hypothesis, "left factor has a loop or coloop");
  if (m2.is_loop(e) || m2.is_coloop(e))
    throw Error(Errc::hypothesis, "summed element is a loop or coloop");

  DeltaMatroid composite = delta_tensor(m1, m2, e, DmCompositionMode::even);
  DeltaMatroid contracted = m2.contract_element(e);
  DeltaMatroid deleted = m2.delete_element(e);

  const int r1 = m1.max_rank();
  const int n1 = static_cast<int>(m1.ground_size()) - r1;

  int checked = 0;
  for (const auto& [x, y] : sample_points()) {
    if (checked >= min_points) break;
    Rational det = (x - 1) * (y - 1) - 1;
    if (det == 0) continue;
    Rational t_del = matroid_tutte_eval(deleted, x, y);
    Rational t_con = matroid_tutte_eval(contracted, x, y);
    // (x-1)*alpha + beta = T(M2 \ e), alpha + (y-1)*beta = T(M2 / e)
    Rational alpha = ((y - 1) * t_del - t_con) / det;
    Rational beta = ((x - 1) * t_con - t_del) / det;
    if (alpha == 0 || beta == 0) continue;

    Rational lhs = matroid_tutte_eval(composite, x, y);
    Rational rhs = rational_pow(alpha, n1) * rational_pow(beta, r1) *
                   matroid_tutte_eval(m1, t_del / beta, t_con / alpha);
    if (lhs != rhs) return false;
    ++checked;
  }
  if (checked < min_points)
    throw Error(Errc::hypothesis, "not enough admissible sample points");
  return true;
}

}  // namespace mmtp

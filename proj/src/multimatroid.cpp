#include "mmtp/multimatroid.hpp"

#include <algorithm>
#include <sstream>

namespace mmtp {

Carrier::Carrier(std::vector<SkewClass> classes) : classes_(std::move(classes)) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const SkewClass& sc = classes_[c];
    if (sc.name.empty()) throw Error(Errc::malformed, "skew class with empty name");
    if (sc.elems.empty()) throw Error(Errc::malformed, "skew class '" + sc.name + "' is empty");
    if (!class_lookup_.emplace(sc.name, c).second)
      throw Error(Errc::malformed, "duplicate skew class name '" + sc.name + "'");
    for (std::size_t m = 0; m < sc.elems.size(); ++m) {
      if (sc.elems[m].empty()) throw Error(Errc::malformed, "empty element id in class '" + sc.name + "'");
      if (!elem_lookup_.emplace(sc.elems[m], std::make_pair(c, m)).second)
        throw Error(Errc::malformed, "duplicate element id '" + sc.elems[m] + "'");
    }
  }
}

std::size_t Carrier::class_index(const std::string& name) const {
  auto it = class_lookup_.find(name);
  if (it == class_lookup_.end()) throw Error(Errc::unknown_element, "no skew class named '" + name + "'");
  return it->second;
}

std::pair<std::size_t, std::size_t> Carrier::locate(const std::string& elem) const {
  auto it = elem_lookup_.find(elem);
  if (it == elem_lookup_.end()) throw Error(Errc::unknown_element, "no element named '" + elem + "'");
  return it->second;
}

std::size_t Carrier::element_count() const {
  std::size_t n = 0;
  for (const auto& sc : classes_) n += sc.elems.size();
  return n;
}

bool Carrier::all_classes_of_size(std::size_t q) const {
  return std::all_of(classes_.begin(), classes_.end(),
                     [q](const SkewClass& sc) { return sc.elems.size() == q; });
}

std::size_t selection_size(const Selection& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](int v) { return v != kAbsent; }));
}

int Multimatroid::Root::rank(const Selection& s) const {
  int best = 0;
  for (const Selection& b : bases) {
    int hits = 0;
    for (std::size_t c = 0; c < s.size(); ++c)
      if (s[c] != kAbsent && s[c] == b[c]) ++hits;
    best = std::max(best, hits);
  }
  return best;
}

Multimatroid::Multimatroid(Carrier carrier, const std::vector<std::set<std::string>>& bases) {
  auto root = std::make_shared<Root>();
  root->carrier = std::move(carrier);
  for (const auto& basis : bases) {
    Selection sel(root->carrier.class_count(), kAbsent);
    for (const std::string& elem : basis) {
      auto [c, m] = root->carrier.locate(elem);
      if (sel[c] != kAbsent)
        throw Error(Errc::malformed, "basis meets skew class '" + root->carrier.skew_class(c).name + "' twice");
      sel[c] = static_cast<int>(m);
    }
    if (selection_size(sel) != root->carrier.class_count())
      throw Error(Errc::malformed, "stored basis is not a transversal");
    root->bases.push_back(std::move(sel));
  }
  std::sort(root->bases.begin(), root->bases.end());
  root->bases.erase(std::unique(root->bases.begin(), root->bases.end()), root->bases.end());
  carrier_ = root->carrier;
  class_map_.resize(carrier_.class_count());
  member_map_.resize(carrier_.class_count());
  for (std::size_t c = 0; c < carrier_.class_count(); ++c) {
    class_map_[c] = c;
    member_map_[c].resize(carrier_.skew_class(c).elems.size());
    for (std::size_t m = 0; m < member_map_[c].size(); ++m) member_map_[c][m] = m;
  }
  root_ = std::move(root);
}

int Multimatroid::root_rank_with_pins(const Selection& visible) const {
  Selection root_sel(root_->carrier.class_count(), kAbsent);
  for (const auto& [c, m] : pins_) root_sel[c] = static_cast<int>(m);
  for (std::size_t c = 0; c < visible.size(); ++c)
    if (visible[c] != kAbsent)
      root_sel[class_map_[c]] = static_cast<int>(member_map_[c][static_cast<std::size_t>(visible[c])]);
  return root_->rank(root_sel);
}

int Multimatroid::rank(const Selection& s) const {
  if (s.size() != carrier_.class_count())
    throw Error(Errc::not_a_subtransversal, "selection has wrong class count");
  return root_rank_with_pins(s) - pin_rank_;
}

Selection Multimatroid::to_selection(const std::set<std::string>& elems) const {
  Selection sel(carrier_.class_count(), kAbsent);
  for (const std::string& elem : elems) {
    auto [c, m] = carrier_.locate(elem);
    if (sel[c] != kAbsent)
      throw Error(Errc::not_a_subtransversal,
                  "elements '" + elem + "' and '" +
                      carrier_.skew_class(c).elems[static_cast<std::size_t>(sel[c])] +
                      "' share a skew class");
    sel[c] = static_cast<int>(m);
  }
  return sel;
}

std::set<std::string> Multimatroid::to_elements(const Selection& s) const {
  std::set<std::string> out;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (s[c] != kAbsent) out.insert(carrier_.skew_class(c).elems.at(static_cast<std::size_t>(s[c])));
  return out;
}

std::vector<Selection> Multimatroid::transversals() const {
  const std::size_t n = carrier_.class_count();
  if (n == 0) return {Selection{}};
  std::vector<Selection> out;
  Selection cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t c = 0;
    while (c < n) {
      if (++cur[c] < static_cast<int>(carrier_.skew_class(c).elems.size())) break;
      cur[c] = 0;
      ++c;
    }
    if (c == n) break;
  }
  return out;
}

std::vector<Selection> Multimatroid::near_transversals() const {
  const std::size_t n = carrier_.class_count();
  std::vector<Selection> out;
  for (std::size_t missing = 0; missing < n; ++missing) {
    Selection cur(n, 0);
    cur[missing] = kAbsent;
    while (true) {
      out.push_back(cur);
      std::size_t c = 0;
      while (c < n) {
        if (c == missing) {
          ++c;
          continue;
        }
        if (++cur[c] < static_cast<int>(carrier_.skew_class(c).elems.size())) break;
        cur[c] = 0;
        ++c;
      }
      if (c == n) break;
    }
  }
  return out;
}

std::vector<Selection> Multimatroid::subtransversals() const {
  const std::size_t n = carrier_.class_count();
  std::vector<Selection> out;
  Selection cur(n, kAbsent);
  while (true) {
    out.push_back(cur);
    std::size_t c = 0;
    while (c < n) {
      if (++cur[c] < static_cast<int>(carrier_.skew_class(c).elems.size())) break;
      cur[c] = kAbsent;
      ++c;
    }
    if (c == n) break;
  }
  return out;
}

AxiomReport Multimatroid::check_axioms() const {
  AxiomReport report;
  auto describe = [&](const Selection& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const std::string& e : to_elements(s)) {
      if (!first) out << ',';
      first = false;
      out << e;
    }
    out << '}';
    return out.str();
  };

  if (rank(Selection(carrier_.class_count(), kAbsent)) != 0)
    report.violations.push_back("R1: rank of the empty set is nonzero");

  // R1: matroid rank axioms on the subsets of every transversal.
  for (const Selection& t : transversals()) {
    const std::size_t n = t.size();
    const std::size_t n_subsets = std::size_t(1) << n;
    std::vector<int> ranks(n_subsets);
    std::vector<Selection> subs(n_subsets, Selection(n, kAbsent));
    for (std::size_t mask = 0; mask < n_subsets; ++mask) {
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) subs[mask][i] = t[i];
      ranks[mask] = rank(subs[mask]);
    }
    for (std::size_t mask = 0; mask < n_subsets; ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t(1) << i)) continue;
        int with = ranks[mask | (std::size_t(1) << i)];
        if (with < ranks[mask] || with > ranks[mask] + 1)
          report.violations.push_back("R1: unit increase fails at " + describe(subs[mask]) +
                                      " within " + describe(t));
      }
    }
    for (std::size_t a = 0; a < n_subsets; ++a)
      for (std::size_t b = a + 1; b < n_subsets; ++b)
        if (ranks[a | b] + ranks[a & b] > ranks[a] + ranks[b])
          report.violations.push_back("R1: submodularity fails at " + describe(subs[a]) + ", " +
                                      describe(subs[b]));
    if (report.violations.size() > 50) return report;  // enough evidence
  }

  // R2: skew-pair growth over every subtransversal.
  for (const Selection& s : subtransversals()) {
    int base = rank(s);
    for (std::size_t c = 0; c < carrier_.class_count(); ++c) {
      if (s[c] != kAbsent) continue;
      const std::size_t size = carrier_.skew_class(c).elems.size();
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          Selection si = s, sj = s;
          si[c] = static_cast<int>(i);
          sj[c] = static_cast<int>(j);
          if (rank(si) + rank(sj) - 2 * base < 1)
            report.violations.push_back("R2: fails at " + describe(s) + " with skew pair {" +
                                        carrier_.skew_class(c).elems[i] + "," +
                                        carrier_.skew_class(c).elems[j] + "}");
        }
      }
    }
    if (report.violations.size() > 50) return report;
  }
  return report;
}

bool Multimatroid::is_nondegenerate() const {
  return std::all_of(carrier_.classes().begin(), carrier_.classes().end(),
                     [](const SkewClass& sc) { return sc.elems.size() >= 2; });
}

int Multimatroid::slack_member(const Selection& near, std::size_t missing_class) const {
  const int base = rank(near);
  int found = -1;
  const std::size_t size = carrier_.skew_class(missing_class).elems.size();
  for (std::size_t m = 0; m < size; ++m) {
    Selection ext = near;
    ext[missing_class] = static_cast<int>(m);
    if (rank(ext) == base) {
      if (found != -1)
        throw Error(Errc::not_tight, "two rank-preserving extensions in class '" +
                                         carrier_.skew_class(missing_class).name + "'");
      found = static_cast<int>(m);
    }
  }
  if (found == -1)
    throw Error(Errc::not_tight,
                "no rank-preserving extension in class '" + carrier_.skew_class(missing_class).name + "'");
  return found;
}

bool Multimatroid::is_tight() const {
  if (!is_nondegenerate()) return false;
  for (const Selection& near : near_transversals()) {
    std::size_t missing = 0;
    for (std::size_t c = 0; c < near.size(); ++c)
      if (near[c] == kAbsent) missing = c;
    try {
      slack_member(near, missing);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

std::string Multimatroid::slack_element(const std::set<std::string>& near) const {
  Selection sel = to_selection(near);
  if (selection_size(sel) + 1 != carrier_.class_count())
    throw Error(Errc::not_near_transversal, "set does not miss exactly one skew class");
  std::size_t missing = 0;
  for (std::size_t c = 0; c < sel.size(); ++c)
    if (sel[c] == kAbsent) missing = c;
  int m = slack_member(sel, missing);
  return carrier_.skew_class(missing).elems[static_cast<std::size_t>(m)];
}

Multimatroid Multimatroid::minor(const std::string& elem) const {
  auto [drop_class, member] = carrier_.locate(elem);
  Multimatroid out;
  out.root_ = root_;
  out.projected_ = true;
  out.pins_ = pins_;
  out.pins_.emplace_back(class_map_[drop_class], member_map_[drop_class][member]);
  std::vector<SkewClass> kept;
  for (std::size_t c = 0; c < carrier_.class_count(); ++c) {
    if (c == drop_class) continue;
    kept.push_back(carrier_.skew_class(c));
    out.class_map_.push_back(class_map_[c]);
    out.member_map_.push_back(member_map_[c]);
  }
  out.carrier_ = Carrier(std::move(kept));
  Selection none(root_->carrier.class_count(), kAbsent);
  for (const auto& [c, m] : out.pins_) none[c] = static_cast<int>(m);
  out.pin_rank_ = root_->rank(none);
  return out;
}

Multimatroid Multimatroid::restrict_to(const std::set<std::string>& elems) const {
  Multimatroid out;
  out.root_ = root_;
  out.projected_ = true;
  out.pins_ = pins_;
  out.pin_rank_ = pin_rank_;
  std::vector<SkewClass> kept;
  for (std::size_t c = 0; c < carrier_.class_count(); ++c) {
    const SkewClass& sc = carrier_.skew_class(c);
    SkewClass reduced{sc.name, {}, sc.ordered};
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < sc.elems.size(); ++m) {
      if (elems.count(sc.elems[m])) {
        reduced.elems.push_back(sc.elems[m]);
        members.push_back(member_map_[c][m]);
      }
    }
    if (reduced.elems.empty()) continue;
    kept.push_back(std::move(reduced));
    out.class_map_.push_back(class_map_[c]);
    out.member_map_.push_back(std::move(members));
  }
  out.carrier_ = Carrier(std::move(kept));
  return out;
}

bool Multimatroid::is_singular_element(const std::string& elem) const {
  Selection sel(carrier_.class_count(), kAbsent);
  auto [c, m] = carrier_.locate(elem);
  sel[c] = static_cast<int>(m);
  return rank(sel) == 0;
}

bool Multimatroid::is_singular_class(const std::string& cls) const {
  std::size_t c = carrier_.class_index(cls);
  for (const std::string& elem : carrier_.skew_class(c).elems)
    if (is_singular_element(elem)) return true;
  return false;
}

bool Multimatroid::equals(const Multimatroid& other) const {
  if (carrier_.class_count() != other.carrier_.class_count()) return false;
  for (const SkewClass& sc : carrier_.classes()) {
    if (!other.carrier_.has_class(sc.name)) return false;
    const SkewClass& oc = other.carrier_.skew_class(other.carrier_.class_index(sc.name));
    std::set<std::string> mine(sc.elems.begin(), sc.elems.end());
    std::set<std::string> theirs(oc.elems.begin(), oc.elems.end());
    if (mine != theirs) return false;
  }
  for (const Selection& s : subtransversals())
    if (rank(s) != other.rank_of(to_elements(s))) return false;
  return true;
}

std::vector<Selection> Multimatroid::basis_selections() const {
  if (is_basis_defined()) return root_->bases;
  std::vector<Selection> out;
  for (const auto& elems : maximal_independent_sets()) out.push_back(to_selection(elems));
  return out;
}

std::vector<std::set<std::string>> Multimatroid::basis_sets() const {
  std::vector<std::set<std::string>> out;
  for (const Selection& b : basis_selections()) out.push_back(to_elements(b));
  return out;
}

std::vector<std::set<std::string>> Multimatroid::maximal_independent_sets() const {
  std::vector<Selection> independent;
  for (const Selection& s : subtransversals())
    if (nullity(s) == 0) independent.push_back(s);
  auto contains = [](const Selection& big, const Selection& small) {
    for (std::size_t c = 0; c < big.size(); ++c)
      if (small[c] != kAbsent && small[c] != big[c]) return false;
    return true;
  };
  std::vector<std::set<std::string>> out;
  for (const Selection& s : independent) {
    bool maximal = true;
    for (const Selection& bigger : independent) {
      if (&bigger == &s || selection_size(bigger) <= selection_size(s)) continue;
      if (contains(bigger, s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(to_elements(s));
  }
  return out;
}

}  // namespace mmtp

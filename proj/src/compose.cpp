#include "mmtp/compose.hpp"

#include <algorithm>

namespace mmtp {

namespace {

// slack position within the class order, for an independent near-transversal
// avoiding the class
struct NearInfo {
  std::set<std::string> elems;
  std::size_t slack_position;
};

void require_summable_class(const Multimatroid& z, const std::string& cls, const char* side) {
  std::size_t c = z.carrier().class_index(cls);
  if (!z.carrier().skew_class(c).ordered)
    throw Error(Errc::unordered_class, std::string(side) + " class '" + cls + "' is not ordered");
  if (z.is_singular_class(cls))
    throw Error(Errc::singular_class, std::string(side) + " class '" + cls + "' is singular");
}

// Independent near-transversals avoiding class `cls`, with slack positions.
std::vector<NearInfo> independent_near(const Multimatroid& z, const std::string& cls) {
  const std::size_t avoid = z.carrier().class_index(cls);
  std::vector<NearInfo> out;
  for (const Selection& near : z.near_transversals()) {
    if (near[avoid] != kAbsent) continue;
    if (z.nullity(near) != 0) continue;
    int m = z.slack_member(near, avoid);
    out.push_back(NearInfo{z.to_elements(near), static_cast<std::size_t>(m)});
  }
  return out;
}

}  // namespace

std::map<std::string, std::vector<std::set<std::string>>> slack_partition(const Multimatroid& z,
                                                                          const std::string& cls) {
  const SkewClass& sc = z.carrier().skew_class(z.carrier().class_index(cls));
  std::map<std::string, std::vector<std::set<std::string>>> out;
  for (const std::string& e : sc.elems) out[e];
  for (const NearInfo& info : independent_near(z, cls)) out[sc.elems[info.slack_position]].push_back(info.elems);
  return out;
}

Multimatroid two_sum(const Multimatroid& left, const std::string& left_class,
                     const Multimatroid& right, const std::string& right_class) {
  const std::size_t lc = left.carrier().class_index(left_class);
  const std::size_t rc = right.carrier().class_index(right_class);
  if (left.carrier().skew_class(lc).elems.size() != right.carrier().skew_class(rc).elems.size())
    throw Error(Errc::size_mismatch, "summed classes have different sizes");
  require_summable_class(left, left_class, "left");
  require_summable_class(right, right_class, "right");
  if (!left.is_tight()) throw Error(Errc::not_tight, "left factor is not tight");
  if (!right.is_tight()) throw Error(Errc::not_tight, "right factor is not tight");

  std::vector<SkewClass> classes;
  for (std::size_t c = 0; c < left.carrier().class_count(); ++c)
    if (c != lc) classes.push_back(left.carrier().skew_class(c));
  for (std::size_t c = 0; c < right.carrier().class_count(); ++c)
    if (c != rc) classes.push_back(right.carrier().skew_class(c));
  // Carrier construction rejects element or class name collisions.
  Carrier carrier(classes);

  std::vector<std::set<std::string>> bases;
  auto left_nears = independent_near(left, left_class);
  auto right_nears = independent_near(right, right_class);
  for (const NearInfo& t1 : left_nears) {
    for (const NearInfo& t2 : right_nears) {
      if (t1.slack_position == t2.slack_position) continue;
      std::set<std::string> basis = t1.elems;
      basis.insert(t2.elems.begin(), t2.elems.end());
      bases.push_back(std::move(basis));
    }
  }
  return Multimatroid(std::move(carrier), bases);
}

int two_sum_rank_formula(const Multimatroid& left, const std::string& left_class,
                         const std::set<std::string>& t1, const Multimatroid& right,
                         const std::string& right_class, const std::set<std::string>& t2) {
  const std::size_t lc = left.carrier().class_index(left_class);
  const std::size_t rc = right.carrier().class_index(right_class);
  Selection s1 = left.to_selection(t1);
  Selection s2 = right.to_selection(t2);
  if (s1[lc] != kAbsent || selection_size(s1) + 1 != left.carrier().class_count())
    throw Error(Errc::not_near_transversal, "left part is not a near-transversal avoiding its class");
  if (s2[rc] != kAbsent || selection_size(s2) + 1 != right.carrier().class_count())
    throw Error(Errc::not_near_transversal, "right part is not a near-transversal avoiding its class");
  int i = left.slack_member(s1, lc);
  int j = right.slack_member(s2, rc);
  int total = left.rank(s1) + right.rank(s2);
  return i == j ? total - 1 : total;
}

std::string TensorNaming::element_name(const std::string& left_class, const std::string& right_elem) const {
  auto it = element.find({left_class, right_elem});
  if (it == element.end())
    throw Error(Errc::unknown_element, "no composite name for '" + right_elem + "' at '" + left_class + "'");
  return it->second;
}

Multimatroid renamed_copy(const Multimatroid& z, const std::string& tag, const std::string& keep_class) {
  std::vector<SkewClass> classes;
  for (const SkewClass& sc : z.carrier().classes()) {
    SkewClass fresh = sc;
    if (sc.name != keep_class) {
      fresh.name = sc.name + "@" + tag;
      for (std::string& e : fresh.elems) e += "@" + tag;
    }
    classes.push_back(std::move(fresh));
  }
  std::vector<std::set<std::string>> bases;
  for (const auto& basis : z.basis_sets()) {
    std::set<std::string> fresh;
    for (const std::string& e : basis) {
      auto [c, m] = z.carrier().locate(e);
      fresh.insert(z.carrier().skew_class(c).name == keep_class ? e : e + "@" + tag);
    }
    bases.push_back(std::move(fresh));
  }
  return Multimatroid(Carrier(std::move(classes)), bases);
}

TensorResult tensor_product(const Multimatroid& left, const Multimatroid& right,
                            const std::string& right_class) {
  const std::size_t rc = right.carrier().class_index(right_class);
  const std::size_t q = right.carrier().skew_class(rc).elems.size();
  if (q < 2 || !left.carrier().all_classes_of_size(q))
    throw Error(Errc::not_q_matroid, "left factor is not a q-matroid matching the summed class");
  for (const SkewClass& sc : left.carrier().classes()) {
    if (!sc.ordered) throw Error(Errc::unordered_class, "left class '" + sc.name + "' is not ordered");
    if (left.is_singular_class(sc.name))
      throw Error(Errc::singular_class, "left class '" + sc.name + "' is singular");
  }
  require_summable_class(right, right_class, "right");
  if (!left.is_tight()) throw Error(Errc::not_tight, "left factor is not tight");
  if (!right.is_tight()) throw Error(Errc::not_tight, "right factor is not tight");

  TensorNaming naming;
  std::vector<std::string> left_classes;
  for (const SkewClass& sc : left.carrier().classes()) left_classes.push_back(sc.name);
  for (const std::string& lname : left_classes) {
    for (const SkewClass& sc : right.carrier().classes()) {
      if (sc.name == right_class) continue;
      naming.skew[{lname, sc.name}] = sc.name + "@" + lname;
      for (const std::string& e : sc.elems) naming.element[{lname, e}] = e + "@" + lname;
    }
  }

  Multimatroid current = left;
  for (const std::string& lname : left_classes) {
    Multimatroid copy = renamed_copy(right, lname, right_class);
    current = two_sum(current, lname, copy, right_class);
  }
  return TensorResult{std::move(current), std::move(naming)};
}

bool nullity_decomposition_holds(const Multimatroid& base, const std::vector<SumPart>& parts) {
  Multimatroid composite = base;
  for (const SumPart& part : parts)
    composite = two_sum(composite, part.left_class, part.factor, part.factor_class);

  for (const Selection& t : composite.transversals()) {
    std::set<std::string> all = composite.to_elements(t);

    std::set<std::string> base_part;  // elements of the base carrier kept in the composite
    for (const std::string& e : all)
      if (base.carrier().has_element(e)) base_part.insert(e);

    int part_nullities = 0;
    std::set<std::string> substituted = base_part;
    for (const SumPart& part : parts) {
      std::set<std::string> piece;
      for (const std::string& e : all)
        if (part.factor.carrier().has_element(e)) piece.insert(e);
      Selection sel = part.factor.to_selection(piece);
      std::size_t missing = part.factor.carrier().class_index(part.factor_class);
      int slack = part.factor.slack_member(sel, missing);
      part_nullities += part.factor.nullity(sel);
      const SkewClass& left_sc =
          base.carrier().skew_class(base.carrier().class_index(part.left_class));
      substituted.insert(left_sc.elems.at(static_cast<std::size_t>(slack)));
    }
    if (composite.nullity(t) != base.nullity_of(substituted) + part_nullities) return false;
  }
  return true;
}

}  // namespace mmtp

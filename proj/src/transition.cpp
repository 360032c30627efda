#include "mmtp/transition.hpp"

#include <cstdlib>
#include <future>

namespace mmtp {

namespace {

int requested_threads() {
  const char* env = std::getenv("MMTP_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 1 ? n : 1;
}

MultiPoly weighted_term(const Multimatroid& z, const Selection& sel, int nullity,
                        const WeightMap& weights) {
  Rational coeff = 1;
  Monomial mono = Monomial::variable("t", 2 * nullity);
  for (std::size_t c = 0; c < sel.size(); ++c) {
    if (sel[c] == kAbsent) continue;
    const std::string& elem = z.carrier().skew_class(c).elems[static_cast<std::size_t>(sel[c])];
    auto it = weights.find(elem);
    if (it == weights.end()) {
      mono = mono.times(Monomial::variable(weight_variable(elem)));
    } else if (const std::string* var = std::get_if<std::string>(&it->second)) {
      mono = mono.times(Monomial::variable(*var));
    } else {
      coeff *= std::get<Rational>(it->second);
      if (coeff == 0) break;
    }
  }
  return MultiPoly::term(mono, coeff);
}

MultiPoly accumulate_terms(const Multimatroid& z, const std::vector<Selection>& sets,
                           const WeightMap& weights) {
  const int threads = requested_threads();
  if (threads <= 1 || sets.size() < 64) {
    MultiPoly total;
    for (const Selection& sel : sets) total += weighted_term(z, sel, z.nullity(sel), weights);
    return total;
  }
  // chunked partial sums merged in index order, so the result is independent
  // of scheduling
  const std::size_t chunk = (sets.size() + static_cast<std::size_t>(threads) - 1) / threads;
  std::vector<std::future<MultiPoly>> parts;
  for (std::size_t begin = 0; begin < sets.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, sets.size());
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      MultiPoly part;
      for (std::size_t i = begin; i < end; ++i)
        part += weighted_term(z, sets[i], z.nullity(sets[i]), weights);
      return part;
    }));
  }
  MultiPoly total;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace

std::string weight_variable(const std::string& elem) { return "x." + elem; }

MultiPoly transition_polynomial(const Multimatroid& z, const WeightMap& weights) {
  return accumulate_terms(z, z.transversals(), weights);
}

std::vector<MultiPoly> slack_sums(const Multimatroid& z, const std::string& cls,
                                  const WeightMap& weights) {
  const std::size_t avoid = z.carrier().class_index(cls);
  const SkewClass& sc = z.carrier().skew_class(avoid);
  if (!sc.ordered) throw Error(Errc::unordered_class, "class '" + cls + "' is not ordered");
  if (z.is_singular_class(cls)) throw Error(Errc::singular_class, "class '" + cls + "' is singular");
  if (!z.is_tight()) throw Error(Errc::not_tight, "slack sums need a tight multimatroid");

  std::vector<MultiPoly> ys(sc.elems.size());
  for (const Selection& near : z.near_transversals()) {
    if (near[avoid] != kAbsent) continue;
    int j = z.slack_member(near, avoid);
    ys[static_cast<std::size_t>(j)] += weighted_term(z, near, z.nullity(near), weights);
  }
  return ys;
}

bool linear_system_holds(const Multimatroid& z, const std::string& cls) {
  std::vector<MultiPoly> ys = slack_sums(z, cls);
  const SkewClass& sc = z.carrier().skew_class(z.carrier().class_index(cls));
  MultiPoly all;
  for (const MultiPoly& y : ys) all += y;
  const MultiPoly t = MultiPoly::variable("t");
  for (std::size_t i = 0; i < sc.elems.size(); ++i) {
    MultiPoly rhs = all - ys[i] + t * ys[i];
    if (transition_polynomial(z.minor(sc.elems[i])) != rhs) return false;
  }
  return true;
}

MultiPoly brylawski_rhs(const Multimatroid& left, const Multimatroid& right,
                        const std::string& right_class, const TensorNaming& naming) {
  std::vector<MultiPoly> ys = slack_sums(right, right_class);
  const std::size_t q = ys.size();
  for (const SkewClass& sc : left.carrier().classes())
    if (sc.elems.size() != q || !sc.ordered)
      throw Error(Errc::not_q_matroid, "left factor classes do not match the summed class size");

  MultiPoly q1 = transition_polynomial(left);
  std::map<std::string, MultiPoly> substitution;
  for (const SkewClass& sc : left.carrier().classes()) {
    std::map<std::string, std::string> renames;
    for (const SkewClass& rc : right.carrier().classes()) {
      if (rc.name == right_class) continue;
      for (const std::string& e : rc.elems)
        renames[weight_variable(e)] = weight_variable(naming.element_name(sc.name, e));
    }
    for (std::size_t j = 0; j < q; ++j)
      substitution[weight_variable(sc.elems[j])] = ys[j].rename(renames);
  }
  return q1.substitute(substitution);
}

}  // namespace mmtp

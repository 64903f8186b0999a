#include "parasym/morphisms.hpp"

#include <unordered_map>
#include <unordered_set>

#include "parasym/closure.hpp"
#include "parasym/error.hpp"

namespace parasym {

namespace {

using Sym = GeneratorSymbol;

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t k = 2; k <= n; ++k) f *= k;
  return f;
}

WreathElement transposition_image(const WreathProduct& w, std::uint32_t i, std::uint32_t j, Element a) {
  const std::uint32_t n = w.degree();
  return {d_vector(w.base(), n, i, j, a), Permutation::transposition(n, i - 1, j - 1)};
}

}  // namespace

WreathElement mu_of_generator(const GeneratorSymbol& sym, const WreathProduct& w) {
  const std::uint32_t n = w.degree();
  const FiniteGroup& G = w.base();
  switch (sym.kind) {
    case SymbolKind::kTransposition:
    case SymbolKind::kCoxeter:
      return transposition_image(w, sym.i, sym.j, sym.a);
    case SymbolKind::kCopy: {
      const Tuple g = tuple_from_index(G, n, sym.copy);
      return transposition_image(w, sym.i, sym.j, G.multiply(G.inverse(g[sym.i - 1]), g[sym.j - 1]));
    }
    case SymbolKind::kH:
      return {d_vector(G, n, sym.i, sym.j, sym.a), Permutation::identity(n)};
    case SymbolKind::kReflection:
      return {identity_tuple(n), Permutation::transposition(n, sym.i - 1, sym.j - 1)};
    default:
      throw Error(ErrorKind::kUnsupportedSymbol, "μ is not defined on " + symbol_to_string(sym, &G, n));
  }
}

std::vector<WreathElement> mu_images(const Presentation& p, const WreathProduct& w) {
  std::vector<WreathElement> out;
  out.reserve(p.generator_count());
  for (const auto& sym : p.generators()) out.push_back(mu_of_generator(sym, w));
  return out;
}

HomomorphismCheck verify_homomorphism(const Presentation& p, const WreathProduct& w,
                                      const std::vector<WreathElement>& images) {
  return verify_homomorphism(
      p, images, w.identity(), [&](const auto& x, const auto& y) { return w.multiply(x, y); },
      [&](const auto& x) { return w.inverse(x); }, [&](const auto& x) { return w.is_identity(x); });
}

HomomorphismCheck verify_homomorphism(const Presentation& p, const FiniteGroup& g,
                                      const std::vector<Element>& images) {
  return verify_homomorphism(
      p, images, g.identity(), [&](Element x, Element y) { return g.multiply(x, y); },
      [&](Element x) { return g.inverse(x); }, [](Element x) { return x == 0; });
}

HomomorphismCheck verify_homomorphism(const Presentation& p, const std::vector<Permutation>& images) {
  if (images.empty()) return verify_homomorphism(p, images, Permutation{}, std::multiplies<>{},
                                                 [](const Permutation& x) { return x.inverse(); },
                                                 [](const Permutation& x) { return x.is_identity(); });
  return verify_homomorphism(
      p, images, Permutation::identity(images.front().degree()),
      [](const Permutation& x, const Permutation& y) { return x * y; },
      [](const Permutation& x) { return x.inverse(); }, [](const Permutation& x) { return x.is_identity(); });
}

Word WordMap::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w) {
    if (l.gen >= images.size()) throw Error(ErrorKind::kMalformedWord, "letter outside the map's source");
    const Word& img = images[l.gen];
    if (l.inverse)
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverted());
    else
      out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

IsoCertificate verify_isomorphism(const WordMap& forward, const WordMap& backward,
                                  const EnumerationOptions& options) {
  if (!forward.source || !forward.target || forward.source != backward.target ||
      forward.target != backward.source)
    throw Error(ErrorKind::kMalformedWord, "forward and backward maps must be opposite");
  const Presentation& p = *forward.source;
  const Presentation& q = *forward.target;
  IsoCertificate cert;
  auto gp = enumerate_group(p, options);
  if (!gp) {
    cert.failure = "source enumeration hit the capacity";
    return cert;
  }
  cert.source_order = gp->order();
  auto gq = enumerate_group(q, options);
  if (!gq) {
    cert.failure = "target enumeration hit the capacity";
    return cert;
  }
  cert.target_order = gq->order();
  cert.status = CertificateStatus::kInvalid;

  auto relators_killed = [](const WordMap& m, const EnumeratedGroup& target, std::string& failure) {
    for (const Word& r : m.source->relators())
      if (target.element(m.apply(r)) != 0) {
        failure = "relator " + m.source->word_to_string(r) + " is not sent to 1";
        return false;
      }
    return true;
  };
  auto roundtrip = [](const WordMap& there, const WordMap& back, const EnumeratedGroup& home,
                      std::string& failure) {
    for (std::uint32_t g = 0; g < there.source->generator_count(); ++g)
      if (home.element(back.apply(there.images[g])) != home.generator(g)) {
        failure = "round trip moves " + there.source->symbol_name(g);
        return false;
      }
    return true;
  };

  cert.forward_hom = relators_killed(forward, *gq, cert.failure);
  cert.backward_hom = cert.forward_hom && relators_killed(backward, *gp, cert.failure);
  if (!cert.backward_hom) return cert;
  if (cert.source_order != cert.target_order) {
    cert.failure = "orders differ: " + std::to_string(cert.source_order) + " vs " + std::to_string(cert.target_order);
    return cert;
  }
  cert.roundtrip_ok = roundtrip(forward, backward, *gp, cert.failure) && roundtrip(backward, forward, *gq, cert.failure);
  if (cert.roundtrip_ok) cert.status = CertificateStatus::kValid;
  return cert;
}

namespace {

WordMap map_each(const Presentation& from, const Presentation& to,
                 const std::function<Word(const GeneratorSymbol&)>& f) {
  WordMap m{&from, &to, {}};
  for (const auto& sym : from.generators()) m.images.push_back(f(sym));
  return m;
}

}  // namespace

WordMap coxeter_to_interpolating(const Presentation& cox, const Presentation& s1) {
  return map_each(cox, s1, [&](const Sym& s) { return Word{s1.letter(Sym::transposition(s.i, s.i + 1, s.a))}; });
}

WordMap interpolating_to_coxeter(const Presentation& s1, const Presentation& cox) {
  return map_each(s1, cox, [&](const Sym& s) {
    if (s.j != s.i + 1) throw Error(ErrorKind::kUnsupportedSymbol, "expected an adjacent transposition");
    return Word{cox.letter(Sym::coxeter(s.i, s.a))};
  });
}

WordMap interpolating_embedding(const Presentation& st, const Presentation& st1) {
  return map_each(st, st1, [&](const Sym& s) { return Word{st1.letter(s)}; });
}

WordMap interpolating_retraction(const Presentation& st1, const Presentation& st) {
  const std::uint32_t t = st.meta().t;
  return map_each(st1, st, [&](const Sym& s) {
    if (s.j - s.i <= t) return Word{st.letter(s)};
    const std::uint32_t k = s.i + 1;
    const Letter kj = st.letter(Sym::transposition(k, s.j, 0));
    return Word{kj.inverted(), st.letter(Sym::transposition(s.i, k, s.a)), kj};
  });
}

WordMap transposition_to_interpolating(const Presentation& tr, const Presentation& top) {
  const FiniteGroup& G = *tr.group();
  return map_each(tr, top, [&](const Sym& s) {
    if (s.i < s.j) return Word{top.letter(s)};
    return Word{top.letter(Sym::transposition(s.j, s.i, G.inverse(s.a)))};
  });
}

WordMap interpolating_to_transposition(const Presentation& top, const Presentation& tr) {
  return map_each(top, tr, [&](const Sym& s) { return Word{tr.letter(s)}; });
}

WordMap transposition_to_amalgam(const Presentation& tr, const Presentation& am) {
  const FiniteGroup& G = *tr.group();
  const std::uint32_t n = tr.meta().n;
  return map_each(tr, am, [&](const Sym& s) {
    const std::uint64_t copy = tuple_index(G, unit_tuple(n, s.j - 1, s.a));
    return Word{am.letter(Sym::copy_transposition(s.i, s.j, copy))};
  });
}

WordMap amalgam_to_transposition(const Presentation& am, const Presentation& tr) {
  const FiniteGroup& G = *am.group();
  const std::uint32_t n = am.meta().n;
  return map_each(am, tr, [&](const Sym& s) {
    const Tuple g = tuple_from_index(G, n, s.copy);
    const Element a = G.multiply(G.inverse(g[s.i - 1]), g[s.j - 1]);
    return Word{tr.letter(Sym::transposition(s.i, s.j, a))};
  });
}

WordMap same_alphabet_map(const Presentation& from, const Presentation& to) {
  return map_each(from, to, [&](const Sym& s) { return Word{to.letter(s)}; });
}

std::uint64_t image_subgroup_order(std::uint32_t n, GroupPtr g) {
  const WreathProduct w(*g, n);
  const Presentation cox = coxeter_presentation(n, g);
  const auto gens = mu_images(cox, w);
  return subgroup_closure(gens, w.identity(), [&](const auto& x, const auto& y) { return w.multiply(x, y); })
      .size();
}

AbelianInvariants abelian_invariants_in(const EnumeratedGroup& eg, const std::vector<std::uint32_t>& elements) {
  std::unordered_set<std::uint32_t> members(elements.begin(), elements.end());
  std::vector<std::uint64_t> orders;
  for (std::uint32_t x : elements) {
    for (std::uint32_t y : elements) {
      const std::uint32_t xy = eg.multiply(x, y);
      if (!members.count(xy)) throw Error(ErrorKind::kNotClosed, "element list is not a subgroup");
      if (xy != eg.multiply(y, x)) throw Error(ErrorKind::kNotAbelian, "subgroup is not abelian");
    }
    orders.push_back(eg.element_order(x));
  }
  return invariants_from_element_orders(orders);
}

std::vector<std::uint32_t> subgroup_of(const EnumeratedGroup& eg, const std::vector<std::uint32_t>& generators) {
  return subgroup_closure<std::uint32_t>(generators, 0,
                                         [&](std::uint32_t x, std::uint32_t y) { return eg.multiply(x, y); });
}

bool commutes_with_generators(const EnumeratedGroup& eg, std::uint32_t x) {
  for (std::uint32_t g = 0; g < eg.generator_count(); ++g)
    if (eg.act(x, gen(g)) != eg.act(eg.generator(g), eg.word_of(x))) return false;
  return true;
}

KernelResult kernel_of_mu(const Presentation& p, const EnumeratedGroup& eg) {
  const WreathProduct w(*p.group(), p.meta().n);
  const auto mu = mu_images(p, w);
  std::vector<std::optional<WreathElement>> image(eg.order());
  std::vector<std::uint32_t> order{0};
  image[0] = w.identity();
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::uint32_t g = 0; g < eg.generator_count(); ++g) {
      const std::uint32_t y = eg.act(order[h], gen(g));
      if (image[y]) continue;
      image[y] = w.multiply(*image[order[h]], mu[g]);
      order.push_back(y);
    }
  KernelResult r;
  r.group_order = eg.order();
  std::unordered_set<WreathElement> distinct;
  for (std::uint32_t x : order) {
    distinct.insert(*image[x]);
    if (w.is_identity(*image[x])) r.elements.push_back(x);
  }
  r.image_order = distinct.size();
  r.invariants = abelian_invariants_in(eg, r.elements);
  r.central = true;
  for (std::uint32_t x : r.elements) r.central = r.central && commutes_with_generators(eg, x);
  return r;
}

std::optional<KernelResult> kernel_of_mu(std::uint32_t n, GroupPtr g, const EnumerationOptions& options) {
  const Presentation p = transposition_presentation(n, g);
  auto eg = enumerate_group(p, options);
  if (!eg) return std::nullopt;
  return kernel_of_mu(p, *eg);
}

std::optional<NaturalityResult> kernel_naturality(std::uint32_t n, GroupPtr a, GroupPtr b,
                                                  const std::vector<Element>& inclusion,
                                                  const EnumerationOptions& options) {
  if (inclusion.size() != a->order()) throw Error(ErrorKind::kOutOfRange, "inclusion needs one image per element");
  for (Element x = 0; x < a->order(); ++x)
    for (Element y = 0; y < a->order(); ++y)
      if (b->multiply(inclusion[x], inclusion[y]) != inclusion[a->multiply(x, y)])
        throw Error(ErrorKind::kNotAGroup, "inclusion is not a homomorphism");
  const Presentation pa = transposition_presentation(n, a);
  const Presentation pb = transposition_presentation(n, b);
  auto ga = enumerate_group(pa, options);
  if (!ga) return std::nullopt;
  auto gb = enumerate_group(pb, options);
  if (!gb) return std::nullopt;
  const WordMap f = map_each(pa, pb, [&](const Sym& s) {
    return Word{pb.letter(Sym::transposition(s.i, s.j, inclusion[s.a]))};
  });
  NaturalityResult r;
  r.homomorphism = true;
  for (const Word& rel : pa.relators()) r.homomorphism = r.homomorphism && gb->element(f.apply(rel)) == 0;
  const KernelResult ka = kernel_of_mu(pa, *ga);
  const KernelResult kb = kernel_of_mu(pb, *gb);
  r.source_kernel = ka.elements.size();
  r.target_kernel = kb.elements.size();
  const std::unordered_set<std::uint32_t> target(kb.elements.begin(), kb.elements.end());
  std::unordered_set<std::uint32_t> images;
  r.into_kernel = true;
  for (std::uint32_t x : ka.elements) {
    const std::uint32_t y = gb->element(f.apply(ga->word_of(x)));
    r.into_kernel = r.into_kernel && target.count(y);
    images.insert(y);
  }
  r.injective = images.size() == ka.elements.size();
  return r;
}

std::vector<Consequence> verify_implication(const Presentation& source, const std::vector<Word>& targets,
                                            const EnumerationOptions& options) {
  auto eg = enumerate_group(source, options);
  std::vector<Consequence> out;
  for (const Word& w : targets) {
    source.check_word(w);
    out.push_back(eg ? is_consequence(*eg, w).verdict : Consequence::kTimeout);
  }
  return out;
}

bool SplitCheck::ok() const {
  return hs_index == sn_order && group_order == hs_standalone_order * sn_order && hs_order == hs_standalone_order &&
         section_ok;
}

std::optional<SplitCheck> verify_split_decomposition(std::uint32_t n, GroupPtr g, const EnumerationOptions& options) {
  const Presentation tr = transposition_presentation(n, g);
  auto eg = enumerate_group(tr, options);
  if (!eg) return std::nullopt;
  SplitCheck c;
  c.group_order = eg->order();
  c.sn_order = factorial(n);

  std::vector<Word> h_words;
  for (const auto& s : tr.generators())
    h_words.push_back({tr.letter(s), tr.letter(Sym::transposition(s.i, s.j, 0))});
  const CosetTable index = todd_coxeter(tr, h_words, options);
  if (!index.complete()) return std::nullopt;
  c.hs_index = index.coset_count();
  c.hs_order = c.group_order / c.hs_index;

  auto hs = enumerate_group(hs_presentation(n, g), options);
  if (!hs) return std::nullopt;
  c.hs_standalone_order = hs->order();

  // ι: (ij) -> (ij)_e must respect the S_n relators, π: (ij)_a -> (ij) the
  // S_n(G) relators, and π(ι((ij))) = (ij).
  const Presentation sn = reflection_presentation_sn(n);
  const WordMap iota = map_each(sn, tr, [&](const Sym& s) { return Word{tr.letter(Sym::transposition(s.i, s.j, 0))}; });
  bool ok = true;
  for (const Word& r : sn.relators()) ok = ok && eg->element(iota.apply(r)) == 0;
  std::vector<Permutation> pi;
  for (const auto& s : tr.generators()) pi.push_back(Permutation::transposition(n, s.i - 1, s.j - 1));
  ok = ok && verify_homomorphism(tr, pi).ok;
  for (std::uint32_t k = 0; k < sn.generator_count(); ++k) {
    const Sym& s = sn.symbol(k);
    const Letter img = iota.images[k].front();
    ok = ok && pi[img.gen] == Permutation::transposition(n, s.i - 1, s.j - 1);
  }
  c.section_ok = ok;
  return c;
}

}  // namespace parasym

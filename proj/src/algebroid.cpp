#include "hopfoid/algebroid.hpp"

#include "hopfoid/errors.hpp"

namespace hopfoid {

namespace {

Vec mul(const FinAlgebra& k, const Vec& x, const Vec& y) { return k.multiply(x, y); }

// Σ c · f(p, q) over the entries p⊗q of a vector in V⊗V.
template <class F>
Vec sum_over_pairs(const Vec& v, std::size_t d, std::size_t out_dim, F&& f) {
  VecBuilder out(out_dim);
  for (const auto& e : v.entries()) out.add(f(e.index / d, e.index % d), e.value);
  return std::move(out).build();
}

struct Prepared {
  const Bialgebroid& b;
  std::size_t d;
  std::size_t da;
  std::vector<Vec> reps;  // pivot-section representative of Δ(k)

  explicit Prepared(const Bialgebroid& bb) : b(bb), d(bb.dim()), da(bb.base.dim()) {
    reps.reserve(d);
    for (std::size_t k = 0; k < d; ++k) reps.push_back(b.quotient().section(b.coproduct.column(k)));
  }
  Vec e(std::size_t k) const { return b.total.basis(k); }
  const Vec& alpha(std::size_t a) const { return b.source.column(a); }
  const Vec& beta(std::size_t a) const { return b.target.column(a); }
  Vec eps(const Vec& k) const { return b.counit.apply(k); }
  Vec project(const Vec& pair) const { return b.quotient().project(pair); }
};

void check_bialgebroid_shapes(const Bialgebroid& b) {
  b.total.check_shapes();
  b.base.check_shapes();
  const std::size_t d = b.dim(), da = b.base.dim();
  if (!b.tensor_over_base) throw DimensionMismatch("bialgebroid without balanced tensor");
  if (b.source.src_dim() != da || b.source.dst_dim() != d) throw DimensionMismatch("source shape");
  if (b.target.src_dim() != da || b.target.dst_dim() != d) throw DimensionMismatch("target shape");
  if (b.quotient().ambient_dim() != d * d) throw DimensionMismatch("balanced tensor ambient dimension");
  if (b.coproduct.src_dim() != d || b.coproduct.dst_dim() != b.quotient().quotient_dim()) {
    throw DimensionMismatch("coproduct shape");
  }
  if (b.counit.src_dim() != d || b.counit.dst_dim() != da) throw DimensionMismatch("counit shape");
}

CheckReport image_commutation(const Bialgebroid& b, const VerifyOptions& options) {
  return guarded_check("image commutation", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < b.base.dim(); ++a) {
      for (std::size_t x = 0; x < b.base.dim(); ++x) {
        c.expect_equal({a, x}, mul(b.total, b.source.column(a), b.target.column(x)),
                       mul(b.total, b.target.column(x), b.source.column(a)));
      }
    }
  });
}

}  // namespace

Vec multiply_pair(const FinAlgebra& k, const Vec& x, const Vec& y) {
  const std::size_t d = k.dim();
  VecBuilder out(d * d);
  for (const auto& ex : x.entries()) {
    for (const auto& ey : y.entries()) {
      const Vec& left = k.product(ex.index / d, ey.index / d);
      if (left.is_zero()) continue;
      const Vec& right = k.product(ex.index % d, ey.index % d);
      if (right.is_zero()) continue;
      out.add(tensor(left, right), ex.value * ey.value);
    }
  }
  return std::move(out).build();
}

QuotientSpace tensor_over_base(const FinAlgebra& total, const FinAlgebra& base, const LinMap& alpha,
                               const LinMap& beta, Side side, bool require_commuting) {
  const std::size_t d = total.dim(), da = base.dim();
  if (alpha.src_dim() != da || alpha.dst_dim() != d || beta.src_dim() != da || beta.dst_dim() != d) {
    throw DimensionMismatch("source/target shape");
  }
  if (require_commuting) {
    if (!verify_homomorphism("source", base, total, alpha, {0}).passed) {
      throw ConstructionFailure("source map is not an algebra homomorphism");
    }
    if (!verify_antihomomorphism("target", base, total, beta, {0}).passed) {
      throw ConstructionFailure("target map is not an algebra antihomomorphism");
    }
    Bialgebroid probe;
    probe.total = total;
    probe.base = base;
    probe.source = alpha;
    probe.target = beta;
    if (!image_commutation(probe, {0}).passed) {
      throw NonCommutingImages("images of source and target do not commute");
    }
  }
  Echelon rel(d * d);
  for (std::size_t a = 0; a < da; ++a) {
    // Left: β(a)k ⊗ k′ − k ⊗ α(a)k′.  Right: kα(a) ⊗ k′ − k ⊗ k′β(a).
    std::vector<Vec> first(d), second(d);
    for (std::size_t k = 0; k < d; ++k) {
      if (side == Side::Left) {
        first[k] = total.multiply(beta.column(a), total.basis(k));
        second[k] = total.multiply(alpha.column(a), total.basis(k));
      } else {
        first[k] = total.multiply(total.basis(k), alpha.column(a));
        second[k] = total.multiply(total.basis(k), beta.column(a));
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t k2 = 0; k2 < d; ++k2) {
        Vec r = tensor(first[k], total.basis(k2));
        r -= tensor(total.basis(k), second[k2]);
        rel.insert(r);
      }
    }
  }
  return QuotientSpace(std::move(rel));
}

DoubleQuotient::DoubleQuotient(const QuotientSpace& first_pair, const QuotientSpace& second_pair,
                               std::size_t factor_dim)
    : d_(factor_dim), first_project_(first_pair.project_map()) {
  if (first_pair.ambient_dim() != d_ * d_ || second_pair.ambient_dim() != d_ * d_) {
    throw DimensionMismatch("double quotient factor dimension");
  }
  const std::size_t q1 = first_pair.quotient_dim();
  Echelon rel(q1 * d_);
  const auto rows = second_pair.relations().rows();
  for (std::size_t k = 0; k < d_; ++k) {
    for (const auto& y : rows) {
      VecBuilder v(q1 * d_);
      for (const auto& e : y.entries()) {
        const std::size_t j = e.index / d_, l = e.index % d_;
        for (const auto& p : first_project_.column(k * d_ + j).entries()) {
          v.add(p.index * d_ + l, e.value * p.value);
        }
      }
      rel.insert(std::move(v).build());
    }
  }
  second_ = QuotientSpace(std::move(rel));
}

Vec DoubleQuotient::project(const Vec& triple) const {
  return second_.project(apply_left(first_project_, triple, d_));
}

LinMap normal_form_section(const QuotientSpace& q, const std::vector<Vec>& normal_form) {
  if (normal_form.size() != q.quotient_dim()) {
    throw NormalFormFailure("normal form has " + std::to_string(normal_form.size()) + " vectors for a " +
                            std::to_string(q.quotient_dim()) + "-dimensional quotient");
  }
  const std::size_t n = normal_form.size();
  LinMap nf(n, q.ambient_dim(), normal_form);
  LinMap restricted = LinMap::from_columns(n, n, [&](std::size_t j) { return q.project(normal_form[j]); });
  auto inv = inverse(restricted);
  if (!inv) throw NormalFormFailure("normal form does not complement the relations");
  return compose(nf, *inv);
}

LinMap canonical_smash_section(const Bialgebroid& b, const SmashAlgebra& s) {
  if (s.dim() != b.dim()) throw DimensionMismatch("smash and bialgebroid dimensions differ");
  std::vector<Vec> nf;
  const std::size_t d = b.dim();
  if (s.kind == SmashKind::LH) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t g = 0; g < s.dim_second; ++g) nf.push_back(tensor(b.total.basis(k), s.embed_second.column(g)));
    }
  } else {
    for (std::size_t f = 0; f < s.dim_first; ++f) {
      for (std::size_t k = 0; k < d; ++k) nf.push_back(tensor(s.embed_first.column(f), b.total.basis(k)));
    }
  }
  return normal_form_section(b.quotient(), nf);
}

CheckReport verify_bialgebroid(const Bialgebroid& b, const VerifyOptions& options) {
  const bool left = b.side == Side::Left;
  const std::string title = left ? "left bialgebroid" : "right bialgebroid";
  try {
    check_bialgebroid_shapes(b);
  } catch (const Error& e) {
    return guarded_check(title, options, [&](CheckBuilder& c) { c.fail_with_note(e.what()); });
  }
  Prepared p(b);
  const std::size_t d = p.d, da = p.da;
  const FinAlgebra& K = b.total;
  const FinAlgebra& A = b.base;
  std::vector<CheckReport> parts;

  parts.push_back(verify_homomorphism("source homomorphism", A, K, b.source, options));
  parts.push_back(verify_antihomomorphism("target antihomomorphism", A, K, b.target, options));
  parts.push_back(image_commutation(b, options));

  parts.push_back(guarded_check("coproduct bimodule map", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t x = 0; x < da; ++x) {
        const Vec ab = mul(K, p.alpha(a), p.beta(x));
        for (std::size_t k = 0; k < d; ++k) {
          if (left) {
            c.expect_equal({a, x, k}, b.coproduct.apply(mul(K, ab, p.e(k))),
                           p.project(multiply_pair(K, tensor(p.alpha(a), p.beta(x)), p.reps[k])));
          } else {
            c.expect_equal({a, x, k}, b.coproduct.apply(mul(K, p.e(k), ab)),
                           p.project(multiply_pair(K, p.reps[k], tensor(p.beta(x), p.alpha(a)))));
          }
        }
      }
    }
  }));

  parts.push_back(guarded_check("counit bimodule map", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t x = 0; x < da; ++x) {
        const Vec ab = mul(K, p.alpha(a), p.beta(x));
        for (std::size_t k = 0; k < d; ++k) {
          const Vec ek = p.eps(p.e(k));
          if (left) {
            c.expect_equal({a, x, k}, p.eps(mul(K, ab, p.e(k))), mul(A, mul(A, A.basis(a), ek), A.basis(x)));
          } else {
            c.expect_equal({a, x, k}, p.eps(mul(K, p.e(k), ab)), mul(A, mul(A, A.basis(x), ek), A.basis(a)));
          }
        }
      }
    }
  }));

  parts.push_back(guarded_check("coassociativity", options, [&](CheckBuilder& c) {
    DoubleQuotient triple(b.quotient(), b.quotient(), d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec lhs = sum_over_pairs(p.reps[k], d, d * d * d,
                                     [&](std::size_t x, std::size_t y) { return tensor(p.reps[x], p.e(y)); });
      const Vec rhs = sum_over_pairs(p.reps[k], d, d * d * d,
                                     [&](std::size_t x, std::size_t y) { return tensor(p.e(x), p.reps[y]); });
      c.expect_equal({k}, triple.project(lhs), triple.project(rhs));
    }
  }));

  parts.push_back(guarded_check("counit laws", options, [&](CheckBuilder& c) {
    for (std::size_t k = 0; k < d; ++k) {
      const Vec& r = p.reps[k];
      Vec first, second;
      if (left) {
        first = sum_over_pairs(r, d, d, [&](std::size_t x, std::size_t y) {
          return mul(K, b.source.apply(p.eps(p.e(x))), p.e(y));
        });
        second = sum_over_pairs(r, d, d, [&](std::size_t x, std::size_t y) {
          return mul(K, b.target.apply(p.eps(p.e(y))), p.e(x));
        });
      } else {
        first = sum_over_pairs(r, d, d, [&](std::size_t x, std::size_t y) {
          return mul(K, p.e(y), b.target.apply(p.eps(p.e(x))));
        });
        second = sum_over_pairs(r, d, d, [&](std::size_t x, std::size_t y) {
          return mul(K, p.e(x), b.source.apply(p.eps(p.e(y))));
        });
      }
      c.expect_equal({k}, first, p.e(k));
      c.expect_equal({k}, second, p.e(k));
    }
  }));

  parts.push_back(guarded_check("takeuchi", options, [&](CheckBuilder& c) {
    const Vec one = K.unit;
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t a = 0; a < da; ++a) {
        Vec v;
        if (left) {
          v = multiply_pair(K, p.reps[k], tensor(p.beta(a), one));
          v -= multiply_pair(K, p.reps[k], tensor(one, p.alpha(a)));
        } else {
          v = multiply_pair(K, tensor(p.alpha(a), one), p.reps[k]);
          v -= multiply_pair(K, tensor(one, p.beta(a)), p.reps[k]);
        }
        c.expect_equal({k, a}, p.project(v), Vec(b.quotient().quotient_dim()));
      }
    }
  }));

  parts.push_back(guarded_check("coproduct multiplicative", options, [&](CheckBuilder& c) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t k2 = 0; k2 < d; ++k2) {
        c.expect_equal({k, k2}, b.coproduct.apply(K.product(k, k2)),
                       p.project(multiply_pair(K, p.reps[k], p.reps[k2])));
      }
    }
    c.expect_equal({}, b.coproduct.apply(K.unit), p.project(tensor(K.unit, K.unit)));
  }));

  parts.push_back(guarded_check("counit action", options, [&](CheckBuilder& c) {
    for (std::size_t a = 0; a < da; ++a) c.expect_equal({a}, p.eps(p.alpha(a)), A.basis(a));
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t k2 = 0; k2 < d; ++k2) {
          if (left) {
            // ε(kk′α(a)) = ε(k α(ε(k′α(a))))
            const Vec inner = p.eps(mul(K, p.e(k2), p.alpha(a)));
            c.expect_equal({k, k2, a}, p.eps(mul(K, K.product(k, k2), p.alpha(a))),
                           p.eps(mul(K, p.e(k), b.source.apply(inner))));
          } else {
            // ε(α(a)kk′) = ε(α(ε(α(a)k)) k′)
            const Vec inner = p.eps(mul(K, p.alpha(a), p.e(k)));
            c.expect_equal({a, k, k2}, p.eps(mul(K, p.alpha(a), K.product(k, k2))),
                           p.eps(mul(K, b.source.apply(inner), p.e(k2))));
          }
        }
      }
    }
  }));

  return aggregate(title, std::move(parts));
}

CheckReport verify_left_bialgebroid(const Bialgebroid& b, const VerifyOptions& options) {
  if (b.side != Side::Left) {
    return guarded_check("left bialgebroid", options,
                         [](CheckBuilder& c) { c.fail_with_note("structure is a right bialgebroid"); });
  }
  return verify_bialgebroid(b, options);
}

CheckReport verify_right_bialgebroid(const Bialgebroid& b, const VerifyOptions& options) {
  if (b.side != Side::Right) {
    return guarded_check("right bialgebroid", options,
                         [](CheckBuilder& c) { c.fail_with_note("structure is a left bialgebroid"); });
  }
  return verify_bialgebroid(b, options);
}

CheckReport verify_antihom_sweep(std::string name, const FinAlgebra& k, const LinMap& tau,
                                 const VerifyOptions& options) {
  return verify_antihomomorphism(std::move(name), k, k, tau, options);
}

CheckReport verify_maps_equal(std::string name, const LinMap& lhs, const LinMap& rhs, const VerifyOptions& options) {
  return guarded_check(std::move(name), options, [&](CheckBuilder& c) {
    if (lhs.src_dim() != rhs.src_dim() || lhs.dst_dim() != rhs.dst_dim()) {
      throw DimensionMismatch("compared maps have different shapes");
    }
    for (std::size_t j = 0; j < lhs.src_dim(); ++j) c.expect_equal({j}, lhs.column(j), rhs.column(j));
  });
}

CheckReport verify_invertible(std::string name, const LinMap& m, const VerifyOptions& options) {
  return guarded_check(std::move(name), options, [&](CheckBuilder& c) {
    auto inv = inverse(m);
    if (!inv) {
      c.fail_with_note("matrix is singular");
      return;
    }
    const auto id = LinMap::identity(m.src_dim());
    for (std::size_t j = 0; j < m.src_dim(); ++j) c.expect_equal({j}, m.apply(inv->column(j)), id.column(j));
  });
}

CheckReport verify_lu_hopf(const LuHopfAlgebroid& lh, const VerifyOptions& options) {
  const Bialgebroid& b = lh.left;
  const FinAlgebra& K = b.total;
  const std::size_t d = b.dim();
  std::vector<CheckReport> parts;
  parts.push_back(guarded_check("section", options, [&](CheckBuilder& c) {
    check_bialgebroid_shapes(b);
    const std::size_t q = b.quotient().quotient_dim();
    if (lh.gamma.src_dim() != q || lh.gamma.dst_dim() != d * d) throw DimensionMismatch("section shape");
    for (std::size_t j = 0; j < q; ++j) {
      c.expect_equal({j}, b.quotient().project(lh.gamma.column(j)), Vec::basis(q, j));
    }
  }));
  if (!parts.back().passed) return aggregate("lu hopf", std::move(parts));

  parts.push_back(verify_antihom_sweep("tau antihomomorphism", K, lh.tau, options));
  parts.push_back(verify_invertible("tau invertible", lh.tau, options));
  parts.push_back(verify_maps_equal("tau beta = alpha", compose(lh.tau, b.target), b.source, options));
  parts.push_back(guarded_check("antipode law with section", options, [&](CheckBuilder& c) {
    for (std::size_t k = 0; k < d; ++k) {
      const Vec rep = lh.gamma.apply(b.coproduct.column(k));
      const Vec lhs = sum_over_pairs(rep, d, d, [&](std::size_t x, std::size_t y) {
        return K.multiply(K.basis(x), lh.tau.column(y));
      });
      c.expect_equal({k}, lhs, b.source.apply(b.counit.column(k)));
    }
  }));
  parts.push_back(guarded_check("balanced antipode law", options, [&](CheckBuilder& c) {
    for (std::size_t k = 0; k < d; ++k) {
      const Vec rep = lh.gamma.apply(b.coproduct.column(k));
      const Vec lhs = sum_over_pairs(rep, d, d, [&](std::size_t x, std::size_t y) {
        return K.multiply(lh.tau.column(x), K.basis(y));
      });
      c.expect_equal({k}, lhs, b.target.apply(b.counit.apply(lh.tau.column(k))));
    }
    // μ(τ⊗id) must kill β(a)k ⊗ k′ − k ⊗ α(a)k′.
    for (std::size_t a = 0; a < b.base.dim(); ++a) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vec left = lh.tau.apply(K.multiply(b.target.column(a), K.basis(k)));
        const Vec right = K.multiply(lh.tau.column(k), b.source.column(a));
        for (std::size_t k2 = 0; k2 < d; ++k2) {
          c.expect_equal({a, k, k2}, K.multiply(left, K.basis(k2)), K.multiply(right, K.basis(k2)));
        }
      }
    }
  }));
  return aggregate("lu hopf", std::move(parts));
}

CheckReport verify_symmetric_hopf(const SymmetricHopfAlgebroid& sh, const VerifyOptions& options) {
  const Bialgebroid& L = sh.left;
  const Bialgebroid& R = sh.right;
  const FinAlgebra& K = L.total;
  const std::size_t d = L.dim();
  std::vector<CheckReport> parts;
  parts.push_back(verify_left_bialgebroid(L, options));
  parts.push_back(verify_right_bialgebroid(R, options));
  parts.push_back(guarded_check("common total algebra", options, [&](CheckBuilder& c) {
    if (R.dim() != d) throw DimensionMismatch("total algebras differ in dimension");
    for (std::size_t j = 0; j < d * d; ++j) c.expect_equal({j}, L.total.mult.column(j), R.total.mult.column(j));
    c.expect_equal({}, L.total.unit, R.total.unit);
  }));
  if (!parts.back().passed) return aggregate("symmetric hopf", std::move(parts));

  parts.push_back(verify_antihom_sweep("tau antihomomorphism", K, sh.tau, options));
  parts.push_back(verify_maps_equal("alpha_L eps_L beta_R = beta_R", compose(L.source, compose(L.counit, R.target)),
                               R.target, options));
  parts.push_back(verify_maps_equal("beta_L eps_L alpha_R = alpha_R", compose(L.target, compose(L.counit, R.source)),
                               R.source, options));
  parts.push_back(verify_maps_equal("alpha_R eps_R beta_L = beta_L", compose(R.source, compose(R.counit, L.target)),
                               L.target, options));
  parts.push_back(verify_maps_equal("beta_R eps_R alpha_L = alpha_L", compose(R.target, compose(R.counit, L.source)),
                               L.source, options));

  std::vector<Vec> rep_l, rep_r;
  for (std::size_t k = 0; k < d; ++k) {
    rep_l.push_back(L.quotient().section(L.coproduct.column(k)));
    rep_r.push_back(R.quotient().section(R.coproduct.column(k)));
  }
  const std::size_t d3 = d * d * d;
  parts.push_back(guarded_check("mixed coassociativity (R over L)", options, [&](CheckBuilder& c) {
    // (Δ_R ⊗_L id)Δ_L = (id ⊗_R Δ_L)Δ_R
    DoubleQuotient triple(R.quotient(), L.quotient(), d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec lhs = sum_over_pairs(rep_l[k], d, d3, [&](std::size_t x, std::size_t y) {
        return tensor(rep_r[x], K.basis(y));
      });
      const Vec rhs = sum_over_pairs(rep_r[k], d, d3, [&](std::size_t x, std::size_t y) {
        return tensor(K.basis(x), rep_l[y]);
      });
      c.expect_equal({k}, triple.project(lhs), triple.project(rhs));
    }
  }));
  parts.push_back(guarded_check("mixed coassociativity (L over R)", options, [&](CheckBuilder& c) {
    // (Δ_L ⊗_R id)Δ_R = (id ⊗_L Δ_R)Δ_L
    DoubleQuotient triple(L.quotient(), R.quotient(), d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec lhs = sum_over_pairs(rep_r[k], d, d3, [&](std::size_t x, std::size_t y) {
        return tensor(rep_l[x], K.basis(y));
      });
      const Vec rhs = sum_over_pairs(rep_l[k], d, d3, [&](std::size_t x, std::size_t y) {
        return tensor(K.basis(x), rep_r[y]);
      });
      c.expect_equal({k}, triple.project(lhs), triple.project(rhs));
    }
  }));

  parts.push_back(verify_maps_equal("tau beta_L = alpha_L", compose(sh.tau, L.target), L.source, options));
  parts.push_back(verify_maps_equal("tau beta_R = alpha_R", compose(sh.tau, R.target), R.source, options));

  CheckReport law_l = guarded_check("antipode law (left)", options, [&](CheckBuilder& c) {
    // μ_{⊗′_L}(τ ⊗ id)Δ_L = α_R ε_R
    for (std::size_t k = 0; k < d; ++k) {
      const Vec rep = sh.gamma_left.apply(L.coproduct.column(k));
      const Vec lhs = sum_over_pairs(rep, d, d, [&](std::size_t x, std::size_t y) {
        return K.multiply(sh.tau.column(x), K.basis(y));
      });
      c.expect_equal({k}, lhs, R.source.apply(R.counit.column(k)));
    }
  });
  law_l.parts.push_back(guarded_check("representative independence (left)", options, [&](CheckBuilder& c) {
    // τ(β_L(a)k)k′ = τ(k)α_L(a)k′
    for (std::size_t a = 0; a < L.base.dim(); ++a) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vec lhs = sh.tau.apply(K.multiply(L.target.column(a), K.basis(k)));
        const Vec rhs = K.multiply(sh.tau.column(k), L.source.column(a));
        for (std::size_t k2 = 0; k2 < d; ++k2) {
          c.expect_equal({a, k, k2}, K.multiply(lhs, K.basis(k2)), K.multiply(rhs, K.basis(k2)));
        }
      }
    }
  }));
  law_l.passed = law_l.passed && law_l.parts.back().passed;
  parts.push_back(std::move(law_l));

  CheckReport law_r = guarded_check("antipode law (right)", options, [&](CheckBuilder& c) {
    // μ_{⊗′_R}(id ⊗ τ)Δ_R = α_L ε_L
    for (std::size_t k = 0; k < d; ++k) {
      const Vec rep = sh.gamma_right.apply(R.coproduct.column(k));
      const Vec lhs = sum_over_pairs(rep, d, d, [&](std::size_t x, std::size_t y) {
        return K.multiply(K.basis(x), sh.tau.column(y));
      });
      c.expect_equal({k}, lhs, L.source.apply(L.counit.column(k)));
    }
  });
  law_r.parts.push_back(guarded_check("representative independence (right)", options, [&](CheckBuilder& c) {
    // kα_R(a)τ(k′) = kτ(k′β_R(a))
    for (std::size_t a = 0; a < R.base.dim(); ++a) {
      for (std::size_t k2 = 0; k2 < d; ++k2) {
        const Vec lhs = K.multiply(R.source.column(a), sh.tau.column(k2));
        const Vec rhs = sh.tau.apply(K.multiply(K.basis(k2), R.target.column(a)));
        for (std::size_t k = 0; k < d; ++k) {
          c.expect_equal({a, k, k2}, K.multiply(K.basis(k), lhs), K.multiply(K.basis(k), rhs));
        }
      }
    }
  }));
  law_r.passed = law_r.passed && law_r.parts.back().passed;
  parts.push_back(std::move(law_r));

  return aggregate("symmetric hopf", std::move(parts));
}

}  // namespace hopfoid

#include "darboux/airy.hpp"

namespace darboux {

AiryParam::AiryParam(unsigned n, Rational alpha0, std::vector<Rational> tail)
    : n_(n), alpha0_(std::move(alpha0)), tail_(std::move(tail)) {
    if (n_ < 2) throw DomainError("Airy N must be >= 2");
    alpha0_.canonicalize();
    if (alpha0_ == 0) throw DomainError("Airy alpha0 must be nonzero");
    if (tail_.size() + 2 != n_ && !(n_ == 2 && tail_.empty()))
        throw DomainError("Airy tail must have length N-2");
    for (auto& a : tail_) a.canonicalize();
}

DiffOp airy_op(const AiryParam& p, const std::string& var) {
    DiffOp d = DiffOp::d(var);
    DiffOp acc = d.pow(p.n());
    for (size_t i = 0; i < p.tail().size(); ++i)
        acc = acc + d.pow(p.n() - 2 - static_cast<unsigned>(i)) *
                        Scalar(p.tail()[i]);
    acc = acc - DiffOp::mul_by(UniPoly::monomial(var, Scalar(p.alpha0()), 1));
    return acc;
}

UniPoly airy_palpha(const AiryParam& p, const std::string& var) {
    UniPoly acc = UniPoly::monomial(var, Scalar(1), p.n());
    for (size_t i = 0; i < p.tail().size(); ++i)
        acc = acc + UniPoly::monomial(var, Scalar(p.tail()[i]),
                                      p.n() - 2 - static_cast<unsigned>(i));
    return acc;
}

AiryReduceRule airy_reduce_rule(const AiryParam& p) {
    AiryReduceRule r;
    r.y_coeff = Scalar(p.alpha0());
    r.low_coeff.assign(p.n(), Scalar(0));
    for (size_t i = 0; i < p.tail().size(); ++i)
        r.low_coeff[p.n() - 2 - i] = -Scalar(p.tail()[i]);
    return r;
}

std::pair<AiryParam, AiryParam> airy_involutions(const AiryParam& p) {
    long n = p.n();
    Rational s0 = (n % 2 == 0) ? -p.alpha0() : p.alpha0();   // (-1)^{N+1} a0
    Rational a0 = (n % 2 == 0) ? p.alpha0() : -p.alpha0();   // (-1)^N a0
    std::vector<Rational> tail = p.tail();
    for (size_t i = 0; i < tail.size(); ++i) {
        unsigned idx = 2 + static_cast<unsigned>(i);  // this is alpha_idx
        if (idx % 2 == 1) tail[i] = -tail[i];         // (-1)^idx alpha_idx
    }
    return {AiryParam(p.n(), s0, tail), AiryParam(p.n(), a0, tail)};
}

DiffOp airy_star1(const DiffOp& q, unsigned n) {
    const std::string& var = q.var();
    if (q.is_zero()) return q;
    RatFun corr(UniPoly::constant(var, Scalar(Rational(1 - static_cast<long>(n),
                                                       static_cast<long>(n)))),
                UniPoly::monomial(var, Scalar(1), 1));
    DiffOp base = DiffOp::d(var) + DiffOp::mul_by(corr);
    UniPoly sx = UniPoly::monomial(var, Scalar(n % 2 == 0 ? 1 : -1), 1);
    DiffOp acc = DiffOp::zero(var);
    for (size_t k = 0; k < q.coeffs().size(); ++k) {
        if (q.coeffs()[k].is_zero()) continue;
        RatFun qk = q.coeffs()[k].compose_poly(sx);
        Scalar sign((n - 1) * k % 2 == 0 ? 1 : -1);
        acc = acc + op_mul(base.pow(static_cast<unsigned>(k)),
                           DiffOp::mul_by(qk)) * sign;
    }
    return acc;
}

}  // namespace darboux

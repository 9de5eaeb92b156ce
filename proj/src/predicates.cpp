#include "phyllo/predicates.hpp"

#include <gmpxx.h>

#include <cmath>

namespace phyllo::predicates {

namespace {

constexpr double eps = 0x1p-53;
constexpr double ccw_bound = (3.0 + 16.0 * eps) * eps;
constexpr double icc_bound = (10.0 + 96.0 * eps) * eps;
constexpr double o3d_bound = (7.0 + 56.0 * eps) * eps;

thread_local long fallback_count = 0;

int sign_of(const mpq_class& q) { return sgn(q); }

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

long exact_fallbacks() { return fallback_count; }

int orient2d(Vec2 a, Vec2 b, Vec2 c) {
    const double detl = (a.x - c.x) * (b.y - c.y);
    const double detr = (a.y - c.y) * (b.x - c.x);
    const double det = detl - detr;
    const double bound = ccw_bound * (std::fabs(detl) + std::fabs(detr));
    if (std::fabs(det) > bound) return sign_of(det);

    ++fallback_count;
    const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    mpq_class e = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sign_of(e);
}

int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    if (std::fabs(det) > icc_bound * permanent) return sign_of(det);

    ++fallback_count;
    const mpq_class dx(d.x), dy(d.y);
    const mpq_class qax = mpq_class(a.x) - dx, qay = mpq_class(a.y) - dy;
    const mpq_class qbx = mpq_class(b.x) - dx, qby = mpq_class(b.y) - dy;
    const mpq_class qcx = mpq_class(c.x) - dx, qcy = mpq_class(c.y) - dy;
    const mpq_class la = qax * qax + qay * qay;
    const mpq_class lb = qbx * qbx + qby * qby;
    const mpq_class lc = qcx * qcx + qcy * qcy;
    mpq_class e = la * (qbx * qcy - qcx * qby) + lb * (qcx * qay - qax * qcy) + lc * (qax * qby - qbx * qay);
    return sign_of(e);
}

int orient3d(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
    // det[b - a; c - a; d - a] equals -det[a - d; b - d; c - d]
    const double adx = a.x - d.x, ady = a.y - d.y, adz = a.z - d.z;
    const double bdx = b.x - d.x, bdy = b.y - d.y, bdz = b.z - d.z;
    const double cdx = c.x - d.x, cdy = c.y - d.y, cdz = c.z - d.z;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;

    const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) + cdz * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * std::fabs(adz) +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * std::fabs(bdz) +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * std::fabs(cdz);
    if (std::fabs(det) > o3d_bound * permanent) return -sign_of(det);

    ++fallback_count;
    const mpq_class dx(d.x), dy(d.y), dz(d.z);
    const mpq_class qax = mpq_class(a.x) - dx, qay = mpq_class(a.y) - dy, qaz = mpq_class(a.z) - dz;
    const mpq_class qbx = mpq_class(b.x) - dx, qby = mpq_class(b.y) - dy, qbz = mpq_class(b.z) - dz;
    const mpq_class qcx = mpq_class(c.x) - dx, qcy = mpq_class(c.y) - dy, qcz = mpq_class(c.z) - dz;
    mpq_class e = qaz * (qbx * qcy - qcx * qby) + qbz * (qcx * qay - qax * qcy) + qcz * (qax * qby - qbx * qay);
    return -sign_of(e);
}

}  // namespace phyllo::predicates

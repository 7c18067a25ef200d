#include "xxzsim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxzsim {

Cmplx trace(const Mat4& m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

Mat4 tensor2(const Mat2& low, const Mat2& high) {
    Mat4 out;
    for (int rh = 0; rh < 2; ++rh)
        for (int rl = 0; rl < 2; ++rl)
            for (int ch = 0; ch < 2; ++ch)
                for (int cl = 0; cl < 2; ++cl)
                    out(rl + 2 * rh, cl + 2 * ch) = low(rl, cl) * high(rh, ch);
    return out;
}

namespace {

void jacobi_rotate(double a[4][4], double v[4][4], int p, int q) {
    const double apq = a[p][q];
    if (apq == 0.0) return;
    const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e12) {
        t = 1.0 / (2.0 * theta);
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for (int r = 0; r < 4; ++r) {
        if (r == p || r == q) continue;
        const double arp = a[r][p];
        const double arq = a[r][q];
        a[r][p] = arp - s * (arq + tau * arp);
        a[r][q] = arq + s * (arp - tau * arq);
        a[p][r] = a[r][p];
        a[q][r] = a[r][q];
    }
    for (int r = 0; r < 4; ++r) {
        const double vrp = v[r][p];
        const double vrq = v[r][q];
        v[r][p] = vrp - s * (vrq + tau * vrp);
        v[r][q] = vrq + s * (vrp - tau * vrq);
    }
}

}  // namespace

SymEig4 sym_eig4(const Mat4& m) {
    double a[4][4];
    double scale = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            a[r][c] = m(r, c).real();
            scale = std::max(scale, std::abs(a[r][c]));
            if (std::abs(m(r, c).imag()) > 1e-12)
                throw std::invalid_argument("sym_eig4: matrix has non-real entries");
        }
    }
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c)
            if (std::abs(a[r][c] - a[c][r]) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("sym_eig4: matrix is not symmetric");

    double v[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a[p][q]));
        if (off <= 1e-15 * std::max(1.0, scale)) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    }

    SymEig4 out;
    for (int k = 0; k < 4; ++k) {
        out.values[k] = a[k][k];
        for (int r = 0; r < 4; ++r) out.vectors(r, k) = v[r][k];
    }
    return out;
}

}  // namespace xxzsim

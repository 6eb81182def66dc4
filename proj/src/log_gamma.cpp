#include "emshift/log_gamma.hpp"

#include <cmath>

#include "emshift/errors.hpp"

namespace emshift::special
{
namespace
{
// Below this the Stirling series is shifted up by the recurrence
constexpr long double stirling_min = 20.0L;
constexpr long double half_log_two_pi
    = 0.918938533204672741780329736405617639861L;

// Correction series sum_k B_2k / (2k (2k-1) z^(2k-1)), z >= stirling_min
long double stirling_tail(long double z)
{
    constexpr long double coef[] = {
        1.0L / 12,
        -1.0L / 360,
        1.0L / 1260,
        -1.0L / 1680,
        1.0L / 1188,
        -691.0L / 360360,
        1.0L / 156,
        -3617.0L / 122400,
    };
    long double const inv = 1 / z;
    long double const inv2 = inv * inv;
    long double sum = 0;
    // Horner in 1/z^2, smallest terms first
    for (int i = static_cast<int>(std::size(coef)) - 1; i >= 0; --i)
    {
        sum = sum * inv2 + coef[i];
    }
    return sum * inv;
}

// (1 + u) log1p(u) - u, series near zero where the two terms cancel
long double log1p_excess(long double u)
{
    if (std::fabs(u) < 0.1L)
    {
        // sum_{j>=2} (-1)^j u^j / (j (j-1))
        long double term = u * u;
        long double sum = 0;
        for (int j = 2; j < 40; ++j)
        {
            long double const add = term / (j * (j - 1));
            sum += add;
            if (std::fabs(add) <= 1e-22L * std::fabs(sum))
            {
                break;
            }
            term *= -u;
        }
        return sum;
    }
    return (1 + u) * std::log1p(u) - u;
}

int shift_count(long double x)
{
    return x >= stirling_min ? 0 : static_cast<int>(std::ceil(stirling_min - x));
}
}  // namespace

long double log_gamma(long double x)
{
    if (!(x > 0) || !std::isfinite(x))
    {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    int const shift = shift_count(x);
    long double log_prod = 0;
    for (int i = 0; i < shift; ++i)
    {
        log_prod += std::log(x + i);
    }
    long double const z = x + shift;
    return (z - 0.5L) * std::log(z) - z + half_log_two_pi + stirling_tail(z)
           - log_prod;
}

long double log_gamma_difference(long double z, long double k)
{
    long double const w = z + k;
    if (!(z > 0) || !(w > 0))
    {
        throw DomainError("log_gamma_difference: arguments must be positive");
    }
    if (k == 0)
    {
        return 0;
    }
    // ln G(z+k) - ln G(z) = [ln G(z+s+k) - ln G(z+s)]
    //                       - sum_i ln((z+k+i)/(z+i))
    int const shift = shift_count(std::fmin(z, w));
    long double correction = 0;
    for (int i = 0; i < shift; ++i)
    {
        correction += std::log1p(k / (z + i));
    }
    long double const zs = z + shift;
    long double const ws = w + shift;
    // (w-1/2) ln w - (z-1/2) ln z - k = (w-1/2) log1p(k/z) + k ln z - k
    long double const lead = (ws - 0.5L) * std::log1p(k / zs)
                             + k * std::log(zs) - k;
    return lead + (stirling_tail(ws) - stirling_tail(zs)) - correction;
}

long double log_gamma_difference_excess(long double z, long double k)
{
    long double const w = z + k;
    if (!(z > 0) || !(w > 0))
    {
        throw DomainError(
            "log_gamma_difference_excess: arguments must be positive");
    }
    if (k == 0)
    {
        return 0;
    }
    int const shift = shift_count(std::fmin(z, w));
    long double correction = 0;
    for (int i = 0; i < shift; ++i)
    {
        correction += std::log1p(k / (z + i));
    }
    long double const zs = z + shift;
    long double const ws = w + shift;
    long double const u = k / zs;
    // (ws-1/2) log1p(u) + k ln zs - k - k ln z
    long double const lead = zs * log1p_excess(u) - 0.5L * std::log1p(u)
                             + k * std::log1p(shift / z);
    return lead + (stirling_tail(ws) - stirling_tail(zs)) - correction;
}

}  // namespace emshift::special

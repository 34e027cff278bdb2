#include "suitable/packings.hpp"
#include "suitable/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace suitable {

namespace {

    constexpr double e = std::numbers::e;

    void require(bool condition, const std::string& message)
    {
        if (! condition)
            throw InvalidArgument(message);
    }

    void check_vector(int m, const std::vector<int>& k, const std::string& formula)
    {
        require(k.size() >= 2, formula + ": need at least two clique sizes");
        require(m >= 1 && m < static_cast<int>(k.size()), formula + ": need 1 <= m < r");
        for (int ki : k)
            require(ki >= 2, formula + ": clique sizes must be at least 2");
    }

    std::int64_t floor_to_int(double x)
    {
        return static_cast<std::int64_t>(std::floor(x));
    }

    double recurrence(int m, std::vector<int> k, std::map<std::vector<int>, double>& memo)
    {
        std::sort(k.begin(), k.end());
        if (k.front() <= 1)
            return 1.0;
        const int r = static_cast<int>(k.size());
        if (k[static_cast<std::size_t>(r - m - 1)] == 2)
            return static_cast<double>(k[static_cast<std::size_t>(r - m)]);
        if (auto it = memo.find(k); it != memo.end())
            return it->second;
        double total = 0.0;
        for (int i = 0; i < r; ++i) {
            std::vector<int> smaller = k;
            --smaller[static_cast<std::size_t>(i)];
            total += recurrence(m, std::move(smaller), memo);
        }
        const double value = total / m;
        memo.emplace(std::move(k), value);
        return value;
    }

}  // namespace

double erdos_lower_raw(int k)
{
    return k * std::pow(2.0, k / 2.0) / (e * std::sqrt(2.0));
}

double multicolor_lower_raw(int m, int r, int k)
{
    return std::sqrt(static_cast<double>(m)) / (std::sqrt(e) * r) * k
        * std::pow(static_cast<double>(r) / m, k / 2.0);
}

double multicolor_side_condition(int m, int r, int k)
{
    return std::pow(static_cast<double>(r) / m, (k - 1) / 2.0) * std::pow(e / r, 1.0 / k);
}

double closed_form_upper_raw(int m, std::vector<int> k)
{
    check_vector(m, k, "closed form bound");
    std::sort(k.begin(), k.end());
    const int r = static_cast<int>(k.size());
    int nu = 0;
    for (int i = 0; i < r - m; ++i)
        nu += k[static_cast<std::size_t>(i)] - 2;

    // (sum k_i - r)! / prod (k_i - 1)! as a product of binomials.
    long double multinomial = 1;
    int running = 0;
    for (int ki : k) {
        const int part = ki - 1;
        running += part;
        for (int j = 1; j <= part; ++j)
            multinomial = multinomial * (running - part + j) / j;
    }
    return static_cast<double>(multinomial * std::pow(1.0L / m, nu));
}

double recurrence_upper_raw(int m, std::vector<int> k)
{
    check_vector(m, k, "recurrence bound");
    std::map<std::vector<int>, double> memo;
    return recurrence(m, std::move(k), memo);
}

BoundReport bounds_report(const BoundQuery& query)
{
    BoundReport report;
    const std::string& f = query.formula;

    if (f == "erdos") {
        require(query.k >= 2, "erdos: need k >= 2");
        report.quantity = "R(" + std::to_string(query.k) + "," + std::to_string(query.k) + ")";
        report.direction = "lower";
        report.provenance = "R(k,k) >= k 2^(k/2) / (e sqrt(2))";
        report.raw = erdos_lower_raw(query.k);
        report.value = floor_to_int(*report.raw);
        return report;
    }

    if (f == "robertson") {
        require(query.k >= 3 && query.l >= 3, "robertson: need k, l >= 3");
        require(query.known_value.has_value(), "robertson: supply the value of R(k, l-2)");
        report.quantity = "R(3," + std::to_string(query.k) + "," + std::to_string(query.l) + ")";
        report.direction = "lower";
        report.provenance = "R(3,k,l) >= 4 R(k,l-2) - 3";
        report.value = 4 * *query.known_value - 3;
        report.raw = static_cast<double>(*report.value);
        return report;
    }

    if (f == "lemma9") {
        require(query.m >= 2 && query.m < query.r, "lemma9: need 2 <= m < r");
        require(query.k > 1, "lemma9: need k > 1");
        report.quantity = "R^" + std::to_string(query.m) + "(" + std::to_string(query.k) + ";"
            + std::to_string(query.r) + ")";
        report.direction = "lower";
        report.provenance = "R^m(k;r) >= sqrt(m) / (sqrt(e) r) k (r/m)^(k/2), "
                            "provided (r/m)^((k-1)/2) (e/r)^(1/k) >= 2e";
        const double side = multicolor_side_condition(query.m, query.r, query.k);
        report.side_values["side_condition"] = side;
        report.side_values["threshold"] = 2 * e;
        report.valid = side >= 2 * e;
        if (! report.valid) {
            report.note = "side condition fails: " + std::to_string(side) + " < 2e";
            return report;
        }
        report.raw = multicolor_lower_raw(query.m, query.r, query.k);
        report.value = floor_to_int(*report.raw);
        return report;
    }

    if (f == "corollary1" || f == "lemma10-recurrence") {
        check_vector(query.m, query.k_vec, f);
        std::string ks;
        for (int ki : query.k_vec)
            ks += (ks.empty() ? "" : ",") + std::to_string(ki);
        report.quantity = "R^" + std::to_string(query.m) + "(" + ks + ")";
        report.direction = "upper";
        if (f == "corollary1") {
            std::vector<int> sorted = query.k_vec;
            std::sort(sorted.begin(), sorted.end());
            int nu = 0;
            for (int i = 0; i < static_cast<int>(sorted.size()) - query.m; ++i)
                nu += sorted[static_cast<std::size_t>(i)] - 2;
            report.side_values["nu"] = nu;
            report.provenance = "(1/m)^nu (k_1+...+k_r-r)! / ((k_1-1)! ... (k_r-1)!), "
                                "nu = sum of the r-m smallest (k_i - 2)";
            report.raw = closed_form_upper_raw(query.m, query.k_vec);
        }
        else {
            report.provenance = "R^m(k_1..k_r) <= (1/m) sum_i R^m(.., k_i - 1, ..), "
                                "base R^m(2,..,2,k_{r-m+1},..,k_r) = k_{r-m+1}";
            report.raw = recurrence_upper_raw(query.m, query.k_vec);
        }
        // Tiny epsilon so an exact integer computed in floating point is not
        // floored one below itself.
        report.value = floor_to_int(*report.raw * (1 + 1e-12));
        return report;
    }

    if (f == "johnson-d43") {
        report.quantity = "D(" + std::to_string(query.l) + ",4,3)";
        report.direction = "exact";
        report.provenance = "Johnson bound, attained for k = 4, t = 3";
        report.value = johnson_d_l43(query.l);
        report.raw = static_cast<double>(*report.value);
        return report;
    }

    throw InvalidArgument("unknown formula '" + f + "'");
}

}  // namespace suitable

#include "anforge/exponents.hpp"

#include "anforge/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

namespace anforge {

namespace {

BigRat q(long num, long den = 1) { return make_rat(num, den); }

IdentityCheck named(std::string name)
{
    IdentityCheck c;
    c.name = std::move(name);
    return c;
}

void require_n(int n, int lo, const char* what)
{
    if (n < lo) throw DomainError(std::string(what) + " needs n >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

}  // namespace

BigRat theorem1_exponent(int n)
{
    require_n(n, 6, "theorem1_exponent");
    const long m = n;
    if (n % 2 == 0) return q((m - 4) * (m * m - 4), 8 * (m * m * m - m * m));
    return q((m - 7) * (m + 2), 8 * m * m);
}

BigRat ptbw_exponent(int n)
{
    require_n(n, 5, "ptbw_exponent");
    const BigRat inner = BigRat(1) - BigRat(BigInt(2), factorial(static_cast<unsigned long>(n)));
    BigRat out = inner / BigRat(4L * n - 4);
    out.canonicalize();
    return out;
}

BigRat parameter_count(int n)
{
    require_n(n, 6, "parameter_count");
    const long m = n;
    return n % 2 == 0 ? q(m * m + 2 * m + 8, 8) : q(m * m + 7, 8);
}

BigRat schmidt_e(int n) { return q(n + 2, 4); }

int reduction_branch(int n, const BigRat& e, const BigRat& C)
{
    return (C >= BigRat(n) * (e + q(1, 2)) || e <= q(1, 2)) ? 1 : 2;
}

BigRat reduction_exponent(int n, int d, const BigRat& e, const BigRat& C)
{
    if (n < 2) throw DomainError("reduction_exponent needs n >= 2");
    if (d < 1) throw DomainError("reduction_exponent needs d >= 1");
    if (e < q(1, n - 1)) throw DomainError("reduction_exponent hypothesis failed: e >= 1/(n-1)");
    if (C < BigRat(n)) throw DomainError("reduction_exponent hypothesis failed: C >= n");
    const BigRat nn(static_cast<long>(n) * n - n);
    BigRat out;
    if (reduction_branch(n, e, C) == 1)
        out = (C - q(n, 2)) / nn;
    else
        out = BigRat(2) * e * (C - BigRat(n)) / ((BigRat(2) * e - BigRat(1)) * nn);
    out.canonicalize();
    return out;
}

BigRat schmidt_corollary_exponent(int n, const BigRat& C)
{
    require_n(n, 3, "schmidt_corollary_exponent");
    if (C < BigRat(n)) throw DomainError("schmidt_corollary_exponent hypothesis failed: C >= n");
    const long m = n;
    BigRat out;
    if (C >= q(m * m + 4 * m, 4))
        out = (C - q(m, 2)) / BigRat(m * m - m);
    else
        out = (C - BigRat(m)) * BigRat(m + 2) / BigRat(m * m * m - m * m);
    out.canonicalize();
    return out;
}

BestPossible best_possible(int n)
{
    require_n(n, 6, "best_possible");
    const long m = n;
    const long top = n % 2 == 0 ? m * m - 2 * m + 8 : m * m - 4 * m + 7;
    return {q(top, 8 * m), q(top, 8 * (m * m - m))};
}

std::vector<ExponentRow> comparison_table(int n_lo, int n_hi)
{
    if (n_lo < 6) throw DomainError("comparison_table needs n_lo >= 6");
    if (n_hi < n_lo) throw DomainError("comparison_table needs n_lo <= n_hi");
    std::vector<ExponentRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        ExponentRow row;
        row.n = n;
        row.theorem1 = theorem1_exponent(n);
        row.ptbw = ptbw_exponent(n);
        row.schmidt_e = schmidt_e(n);
        row.param_count_C = parameter_count(n);
        row.reduction = reduction_exponent(n, row.d, row.schmidt_e, row.param_count_C);
        const BestPossible bp = best_possible(n);
        row.best_possible_lower = bp.lower;
        row.best_possible_upper_hypothesis = bp.hypothesis_upper;
        row.larger = row.theorem1 > row.ptbw ? "theorem1" : row.theorem1 < row.ptbw ? "ptbw" : "equal";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<IdentityCheck> identity_suite(int n_lo, int n_hi)
{
    if (n_lo < 6 || n_hi < n_lo) throw DomainError("identity_suite needs 6 <= n_lo <= n_hi");
    std::vector<IdentityCheck> out;
    auto record = [](IdentityCheck& c, bool ok, const std::string& what) {
        ++c.cases;
        if (!ok && c.ok) {
            c.ok = false;
            c.first_failure = what;
        }
    };

    IdentityCheck chain = named("theorem1 = schmidt_corollary(n, C(n))");
    IdentityCheck via_reduction = named("theorem1 = reduction(n, 1, (n+2)/4, C(n))");
    IdentityCheck ordering = named("ptbw > theorem1 at n = 6, theorem1 > ptbw for n >= 8, theorem1(7) = 0");
    IdentityCheck best = named("best_possible lower = reduction branch 1 at e = hypothesis upper");
    IdentityCheck ratio = named("best_possible lower = upper/(n-1)");
    for (int n = n_lo; n <= n_hi; ++n) {
        const std::string at = "n = " + std::to_string(n);
        const BigRat t1 = theorem1_exponent(n);
        const BigRat c = parameter_count(n);
        record(chain, t1 == schmidt_corollary_exponent(n, c), at);
        record(via_reduction, t1 == reduction_exponent(n, 1, schmidt_e(n), c), at);
        const BigRat pt = ptbw_exponent(n);
        bool ok = true;
        if (n == 6) ok = pt > t1;
        else if (n == 7) ok = t1 == 0 && pt > t1;
        else ok = t1 > pt;
        record(ordering, ok, at);
        const BestPossible bp = best_possible(n);
        record(best, reduction_branch(n, bp.hypothesis_upper, c) == 1 &&
                         bp.lower == reduction_exponent(n, 1, bp.hypothesis_upper, c), at);
        record(ratio, bp.lower == bp.hypothesis_upper / BigRat(n - 1), at);
    }

    std::mt19937_64 rng(20240601);
    auto uniform = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };

    IdentityCheck agree = named("schmidt_corollary(n, C) = reduction(n, 1, (n+2)/4, C)");
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(uniform(std::max(3, n_lo), n_hi));
        const BigRat C = BigRat(n) + q(uniform(1, 40L * n * n), uniform(1, 24));
        record(agree, schmidt_corollary_exponent(n, C) == reduction_exponent(n, 1, schmidt_e(n), C),
               "n = " + std::to_string(n) + ", C = " + to_pq(C));
    }

    IdentityCheck continuity = named("reduction branches agree at C = n(e + 1/2)");
    for (int i = 0; i < 20; ++i) {
        const int n = static_cast<int>(uniform(n_lo, n_hi));
        const BigRat e = q(1, 2) + q(uniform(1, 200), uniform(1, 50));
        const BigRat C = BigRat(n) * (e + q(1, 2));
        const BigRat nn(static_cast<long>(n) * n - n);
        const BigRat b1 = (C - q(n, 2)) / nn;
        const BigRat b2 = BigRat(2) * e * (C - BigRat(n)) / ((BigRat(2) * e - BigRat(1)) * nn);
        record(continuity, b1 == b2 && reduction_exponent(n, 1, e, C) == b1,
               "n = " + std::to_string(n) + ", e = " + to_pq(e));
    }

    IdentityCheck crossover = named("schmidt_corollary branches agree at C = (n^2+4n)/4");
    for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
        const long m = n;
        const BigRat C = q(m * m + 4 * m, 4);
        const BigRat b1 = (C - q(m, 2)) / BigRat(m * m - m);
        const BigRat b2 = (C - BigRat(m)) * BigRat(m + 2) / BigRat(m * m * m - m * m);
        record(crossover, b1 == b2, "n = " + std::to_string(n));
    }

    out = {chain, via_reduction, ordering, best, ratio, agree, continuity, crossover};
    return out;
}

namespace {

struct Column {
    std::string name;
    BigRat ExponentRow::*field;
};

const std::vector<Column>& rational_columns()
{
    static const std::vector<Column> cols = {
        {"theorem1", &ExponentRow::theorem1},
        {"ptbw", &ExponentRow::ptbw},
        {"schmidt_e", &ExponentRow::schmidt_e},
        {"param_count_C", &ExponentRow::param_count_C},
        {"reduction", &ExponentRow::reduction},
        {"best_possible_lower", &ExponentRow::best_possible_lower},
        {"best_possible_upper_hypothesis", &ExponentRow::best_possible_upper_hypothesis},
    };
    return cols;
}

std::vector<std::vector<std::string>> table_cells(const std::vector<ExponentRow>& rows, bool decimals)
{
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"n", "d"};
    for (const auto& c : rational_columns()) {
        header.push_back(c.name);
        if (decimals) header.push_back(c.name + "_decimal");
    }
    header.push_back("larger");
    cells.push_back(header);
    for (const auto& row : rows) {
        std::vector<std::string> line{std::to_string(row.n), std::to_string(row.d)};
        for (const auto& c : rational_columns()) {
            line.push_back(to_pq(row.*(c.field)));
            if (decimals) line.push_back(to_decimal(row.*(c.field), 6));
        }
        line.push_back(row.larger);
        cells.push_back(std::move(line));
    }
    return cells;
}

}  // namespace

std::string exponents_csv(const std::vector<ExponentRow>& rows, bool decimals)
{
    std::ostringstream out;
    for (const auto& line : table_cells(rows, decimals)) {
        for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
        out << '\n';
    }
    return out.str();
}

std::string exponents_text(const std::vector<ExponentRow>& rows, bool decimals)
{
    const auto cells = table_cells(rows, decimals);
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(width[i])) << line[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace anforge

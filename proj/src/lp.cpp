#include "nevan/lp.hpp"

#include "nevan/errors.hpp"

namespace nevan {

void LinearProgram::add(std::vector<Rational> coeffs, LinearConstraint::Sense sense, Rational rhs) {
    if (coeffs.size() != nvars) throw InputError("constraint length does not match the number of variables");
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

class Tableau {
public:
    Tableau(const LinearProgram& lp) : nvars_(lp.nvars) {
        std::size_t slacks = 0, artificials = 0;
        for (const auto& c : lp.constraints) {
            bool negate = c.rhs < 0;
            auto sense = c.sense;
            if (negate && sense != LinearConstraint::Sense::eq)
                sense = sense == LinearConstraint::Sense::le ? LinearConstraint::Sense::ge : LinearConstraint::Sense::le;
            if (sense != LinearConstraint::Sense::eq) ++slacks;
            if (sense != LinearConstraint::Sense::le) ++artificials;
        }
        first_artificial_ = nvars_ + slacks;
        ncols_ = first_artificial_ + artificials;
        allowed_.assign(ncols_, true);

        std::size_t slack = nvars_, art = first_artificial_;
        for (const auto& c : lp.constraints) {
            const bool negate = c.rhs < 0;
            auto sense = c.sense;
            if (negate && sense != LinearConstraint::Sense::eq)
                sense = sense == LinearConstraint::Sense::le ? LinearConstraint::Sense::ge : LinearConstraint::Sense::le;
            std::vector<Rational> row(ncols_ + 1);
            for (std::size_t j = 0; j < nvars_; ++j) row[j] = negate ? Rational(-c.coeffs[j]) : c.coeffs[j];
            row[ncols_] = negate ? Rational(-c.rhs) : c.rhs;
            if (sense == LinearConstraint::Sense::le) {
                row[slack] = 1;
                basis_.push_back(slack++);
            } else {
                if (sense == LinearConstraint::Sense::ge) row[slack++] = -1;
                row[art] = 1;
                basis_.push_back(art++);
            }
            rows_.push_back(std::move(row));
        }
    }

    /// Phase one; false when infeasible.
    bool make_feasible() {
        std::vector<Rational> cost(ncols_);
        for (std::size_t j = first_artificial_; j < ncols_; ++j) cost[j] = 1;
        if (optimize(cost) > 0) return false;
        // drive zero-valued artificials out of the basis, dropping redundant rows
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::size_t col = ncols_;
            // columns already fixed at zero cannot enter; a row touching only
            // those is redundant
            for (std::size_t j = 0; j < first_artificial_ && col == ncols_; ++j)
                if (allowed_[j] && rows_[i][j] != 0) col = j;
            if (col == ncols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++i;
        }
        for (std::size_t j = first_artificial_; j < ncols_; ++j) allowed_[j] = false;
        return true;
    }

    /// Minimizes cost (over all columns) from the current feasible basis and
    /// then fixes every column with positive reduced cost at zero, which
    /// restricts later stages to the optimal face. Returns the optimum.
    Rational optimize(const std::vector<Rational>& cost) {
        for (;;) {
            std::vector<Rational> reduced = reduced_costs(cost);
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (allowed_[j] && reduced[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols_) {
                for (std::size_t j = 0; j < ncols_; ++j)
                    if (reduced[j] > 0) allowed_[j] = false;
                Rational value = 0;
                for (std::size_t i = 0; i < rows_.size(); ++i) value += cost[basis_[i]] * rows_[i][ncols_];
                return value;
            }
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) throw ConsistencyError("linear program is unbounded");
            pivot(leave, enter);
        }
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(nvars_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < nvars_) x[basis_[i]] = rows_[i][ncols_];
        return x;
    }

    std::size_t ncols() const { return ncols_; }

private:
    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
        std::vector<Rational> r(cost.begin(), cost.end());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (rows_[i][j] != 0) r[j] -= cb * rows_[i][j];
        }
        return r;
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / rows_[r][c];
        for (auto& v : rows_[r])
            if (v != 0) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= ncols_; ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t nvars_, ncols_ = 0, first_artificial_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
};

}  // namespace

std::optional<std::vector<Rational>> lexicographic_minimize(const LinearProgram& lp,
                                                            const std::vector<std::vector<Rational>>& objectives) {
    Tableau t(lp);
    if (!t.make_feasible()) return std::nullopt;
    for (const auto& obj : objectives) {
        if (obj.size() != lp.nvars) throw InputError("objective length does not match the number of variables");
        std::vector<Rational> cost(t.ncols());
        for (std::size_t j = 0; j < obj.size(); ++j) cost[j] = obj[j];
        t.optimize(cost);
    }
    return t.solution();
}

}  // namespace nevan

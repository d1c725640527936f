#include "fsvm/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fsvm {

void SvmParams::validate() const {
    if (!(c_bound > 0.0)) throw InvalidParameter("c_bound must be positive");
    if (!(gamma > 0.0)) throw InvalidParameter("gamma must be positive");
    if (!(kkt_tolerance > 0.0)) throw InvalidParameter("kkt_tolerance must be positive");
    if (max_passes < 0) throw InvalidParameter("max_passes must be positive");
}

namespace {

// Working state of the SMO solver. Keeps the residuals r_i = y_i - F_i,
// F_i = sum_j alpha_j y_j K_ij, updated incrementally after each pair step.
struct SmoState {
    const Eigen::MatrixXd& K;
    const Eigen::VectorXd& y;
    double C;
    Eigen::VectorXd alpha;
    Eigen::VectorXd F;

    double bound_eps() const { return 1e-12 * C; }
    bool at_lower(Eigen::Index i) const { return alpha[i] <= bound_eps(); }
    bool at_upper(Eigen::Index i) const { return alpha[i] >= C - bound_eps(); }
    bool is_free(Eigen::Index i) const { return !at_lower(i) && !at_upper(i); }

    // Sample i constrains the bias from below (b >= r_i) when its multiplier
    // can still move up in the +y_i direction, from above when it can move
    // down. Free multipliers constrain both sides.
    bool lower_constrains(Eigen::Index i) const {
        return (y[i] > 0 && !at_upper(i)) || (y[i] < 0 && !at_lower(i));
    }
    bool upper_constrains(Eigen::Index i) const {
        return (y[i] > 0 && !at_lower(i)) || (y[i] < 0 && !at_upper(i));
    }
    double residual(Eigen::Index i) const { return y[i] - F[i]; }

    void refresh() { F = K * (alpha.array() * y.array()).matrix(); }
};

struct Selection {
    Eigen::Index i_lo = -1;  // argmax r over lower-constraining samples
    Eigen::Index i_hi = -1;  // argmin r over upper-constraining samples
    double gap = -std::numeric_limits<double>::infinity();
    bool valid() const { return i_lo >= 0 && i_hi >= 0; }
};

Selection select_pair(const SmoState& st, bool free_only) {
    Selection sel;
    double r_lo = -std::numeric_limits<double>::infinity();
    double r_hi = std::numeric_limits<double>::infinity();
    const Eigen::Index n = st.alpha.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (free_only && !st.is_free(i)) continue;
        double r = st.residual(i);
        if (st.lower_constrains(i) && r > r_lo) {
            r_lo = r;
            sel.i_lo = i;
        }
        if (st.upper_constrains(i) && r < r_hi) {
            r_hi = r;
            sel.i_hi = i;
        }
    }
    if (sel.valid()) sel.gap = r_lo - r_hi;
    return sel;
}

// Dual-objective change for moving the pair (i, j) by (d1, d2) with
// y_i d1 + y_j d2 = 0, evaluated against the current F.
double pair_delta(const SmoState& st, Eigen::Index i, Eigen::Index j, double d1,
                  double d2) {
    const double s = st.y[i] * st.y[j];
    return d1 + d2 - d1 * st.y[i] * st.F[i] - d2 * st.y[j] * st.F[j] -
           0.5 * (st.K(i, i) * d1 * d1 + st.K(j, j) * d2 * d2 +
                  2.0 * s * st.K(i, j) * d1 * d2);
}

// Solves the two-variable subproblem exactly. Returns the objective gain,
// or 0 when the step makes no progress.
double take_step(SmoState& st, Eigen::Index i, Eigen::Index j,
                 const SmoObserver& observer) {
    if (i == j) return 0.0;
    const double y1 = st.y[i], y2 = st.y[j];
    const double a1 = st.alpha[i], a2 = st.alpha[j];
    const double s = y1 * y2;
    const double C = st.C;

    double L, H;
    if (s < 0) {
        L = std::max(0.0, a2 - a1);
        H = std::min(C, C + a2 - a1);
    } else {
        L = std::max(0.0, a1 + a2 - C);
        H = std::min(C, a1 + a2);
    }
    if (!(H - L > 0.0)) return 0.0;

    const double E1 = st.F[i] - y1;
    const double E2 = st.F[j] - y2;
    const double eta = st.K(i, i) + st.K(j, j) - 2.0 * st.K(i, j);

    double a2_new;
    if (eta > 0.0 && std::isfinite(eta)) {
        a2_new = a2 + y2 * (E1 - E2) / eta;
        if (!std::isfinite(a2_new)) a2_new = a2 + y2 * (E1 - E2) > a2 ? H : L;
        a2_new = std::clamp(a2_new, L, H);
    } else {
        // Flat or concave-degenerate direction: the best point is an endpoint.
        double gain_l = pair_delta(st, i, j, -s * (L - a2), L - a2);
        double gain_h = pair_delta(st, i, j, -s * (H - a2), H - a2);
        if (gain_l > gain_h && gain_l > 0.0)
            a2_new = L;
        else if (gain_h > gain_l && gain_h > 0.0)
            a2_new = H;
        else
            return 0.0;
    }

    if (std::abs(a2_new - a2) < 1e-14 * (std::abs(a2_new) + std::abs(a2) + 1e-14))
        return 0.0;

    const double d2 = a2_new - a2;
    const double d1 = -s * d2;
    double a1_new = std::clamp(a1 + d1, 0.0, C);
    const double gain = pair_delta(st, i, j, a1_new - a1, d2);
    if (!(gain > 0.0)) return 0.0;

    st.alpha[i] = a1_new;
    st.alpha[j] = std::clamp(a2_new, 0.0, C);
    st.F += (a1_new - a1) * y1 * st.K.col(i) + d2 * y2 * st.K.col(j);
    if (observer) observer(st.alpha);
    return gain;
}

// One working-pair attempt: the maximal violator with its best partner,
// then exhaustive fallbacks against each end of the violating pair.
bool step_with_fallbacks(SmoState& st, const Selection& sel, bool free_only,
                         const SmoObserver& observer) {
    if (take_step(st, sel.i_lo, sel.i_hi, observer) > 0.0) return true;
    const Eigen::Index n = st.alpha.size();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (free_only && !st.is_free(j)) continue;
        if (st.upper_constrains(j) && take_step(st, sel.i_lo, j, observer) > 0.0)
            return true;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (free_only && !st.is_free(i)) continue;
        if (st.lower_constrains(i) && take_step(st, i, sel.i_hi, observer) > 0.0)
            return true;
    }
    return false;
}

double compute_bias(const SmoState& st) {
    double sum = 0.0;
    int count = 0;
    const Eigen::Index n = st.alpha.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (st.is_free(i)) {
            sum += st.residual(i);
            ++count;
        }
    }
    if (count > 0) return sum / count;
    // No free vector: midpoint of the KKT-feasible bias interval.
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (st.lower_constrains(i)) lo = std::max(lo, st.residual(i));
        if (st.upper_constrains(i)) hi = std::min(hi, st.residual(i));
    }
    return 0.5 * (lo + hi);
}

double worst_violation(const SmoState& st, double bias) {
    double worst = 0.0;
    const Eigen::Index n = st.alpha.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double margin = st.y[i] * (st.F[i] + bias);
        double v;
        if (st.at_lower(i))
            v = std::max(0.0, 1.0 - margin);
        else if (st.at_upper(i))
            v = std::max(0.0, margin - 1.0);
        else
            v = std::abs(margin - 1.0);
        worst = std::max(worst, v);
    }
    return worst;
}

void validate_inputs(const Eigen::MatrixXd& K, const std::vector<int>& labels) {
    const Eigen::Index n = K.rows();
    if (K.cols() != n) throw DimensionError("kernel matrix must be square");
    if (static_cast<Eigen::Index>(labels.size()) != n)
        throw DimensionError("label count does not match kernel matrix size");
    bool pos = false, neg = false;
    for (int y : labels) {
        if (y == 1)
            pos = true;
        else if (y == -1)
            neg = true;
        else
            throw InvalidParameter("labels must be +1 or -1");
    }
    if (!pos || !neg) throw DegenerateLabels("training labels contain a single class");
    const double scale = std::max(1.0, K.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (std::abs(K(i, j) - K(j, i)) > 1e-10 * scale)
                throw InvalidKernelMatrix("kernel matrix is not symmetric");
}

}  // namespace

DualSolution solve_dual(const Eigen::MatrixXd& kernel_matrix,
                        const std::vector<int>& labels, const SvmParams& params,
                        const SmoObserver& observer) {
    params.validate();
    validate_inputs(kernel_matrix, labels);

    const Eigen::Index n = kernel_matrix.rows();
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[static_cast<std::size_t>(i)];

    SmoState st{kernel_matrix, y, params.c_bound, Eigen::VectorXd::Zero(n),
                Eigen::VectorXd::Zero(n)};

    const double tol = params.kkt_tolerance;
    const long sweep_budget = params.max_passes > 0 ? params.max_passes : 10 * n;
    const long update_budget = sweep_budget * n;

    long updates = 0;
    bool free_mode = false;
    bool refreshed = false;
    bool converged = false;

    while (true) {
        Selection sel = select_pair(st, free_mode);
        if (!sel.valid() || sel.gap <= tol) {
            if (free_mode) {
                free_mode = false;
                continue;
            }
            // Re-verify against an exactly recomputed F before declaring done.
            st.refresh();
            sel = select_pair(st, false);
            if (!sel.valid() || sel.gap <= tol) {
                converged = true;
                break;
            }
        }

        if (step_with_fallbacks(st, sel, free_mode, observer)) {
            refreshed = false;
            free_mode = true;
            if (++updates > update_budget) break;
        } else if (free_mode) {
            free_mode = false;
        } else if (!refreshed) {
            st.refresh();
            refreshed = true;
        } else {
            break;  // exhaustive pass with exact F made no progress
        }
    }

    st.refresh();
    const double bias = compute_bias(st);
    if (!converged) {
        Selection sel = select_pair(st, false);
        if (sel.valid() && sel.gap > tol)
            throw ConvergenceFailure(
                "SMO exhausted its budget with worst KKT violation " +
                    std::to_string(worst_violation(st, bias)),
                worst_violation(st, bias));
    }

    DualSolution out;
    out.alphas = st.alpha;
    out.bias = bias;
    out.dual_objective =
        st.alpha.sum() - 0.5 * (st.alpha.array() * y.array() * st.F.array()).sum();
    return out;
}

double decision_function(const SvmModel& model, const Eigen::VectorXd& kernel_row) {
    if (static_cast<std::size_t>(kernel_row.size()) != model.support_vectors.size())
        throw DimensionError("kernel row length does not match support vector count");
    double f = model.bias;
    for (Eigen::Index k = 0; k < kernel_row.size(); ++k)
        f += model.dual_coefs[static_cast<std::size_t>(k)] * kernel_row[k];
    return f;
}

double kkt_report(const Eigen::MatrixXd& kernel_matrix, const std::vector<int>& labels,
                  const Eigen::VectorXd& alphas, double bias, const SvmParams& params) {
    params.validate();
    const Eigen::Index n = kernel_matrix.rows();
    if (kernel_matrix.cols() != n) throw DimensionError("kernel matrix must be square");
    if (static_cast<Eigen::Index>(labels.size()) != n || alphas.size() != n)
        throw DimensionError("labels/alphas do not match kernel matrix size");

    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[static_cast<std::size_t>(i)];
    Eigen::VectorXd F = kernel_matrix * (alphas.array() * y.array()).matrix();

    const double eps = 1e-12 * params.c_bound;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double margin = y[i] * (F[i] + bias);
        double v;
        if (alphas[i] <= eps)
            v = std::max(0.0, 1.0 - margin);
        else if (alphas[i] >= params.c_bound - eps)
            v = std::max(0.0, margin - 1.0);
        else
            v = std::abs(margin - 1.0);
        worst = std::max(worst, v);
    }
    return worst;
}

}  // namespace fsvm

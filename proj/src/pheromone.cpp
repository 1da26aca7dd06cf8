#include "rbacs/pheromone.hpp"

#include <stdexcept>
#include <string>

namespace rbacs {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0))
        throw std::domain_error(std::string(name) + " must lie in (0,1), got " + std::to_string(v));
}

}  // namespace

PheromoneField::PheromoneField(int n, double tau0, double c_init)
    : n_(n), tau0_(tau0), c_init_(c_init), tau_(static_cast<std::size_t>(n) * n, 0.0) {}

PheromoneField PheromoneField::init_uniform(int n, double tau0, Exec exec) {
    if (n < 2) throw std::invalid_argument("PheromoneField: need at least 2 cities");
    if (!(tau0 > 0.0)) throw std::domain_error("init_uniform: tau0 must be positive");
    PheromoneField field(n, tau0, 0.0);
    kernels::fill_off_diagonal(field.tau_, n, tau0, exec);
    return field;
}

PheromoneField PheromoneField::init_inverse_cost(const TspInstance& inst, double c, double tau0, Exec exec) {
    if (!(c > 0.0)) throw std::domain_error("init_inverse_cost: c must be positive");
    if (!(tau0 > 0.0)) throw std::domain_error("init_inverse_cost: tau0 must be positive");
    PheromoneField field(inst.n(), tau0, c);
    field.zero_cost_edges_ = kernels::inverse_cost(field.tau_, inst.dist().raw(), inst.n(), c, exec);
    return field;
}

void PheromoneField::set(int r, int s, double value) {
    tau_[static_cast<std::size_t>(r) * n_ + s] = value;
    tau_[static_cast<std::size_t>(s) * n_ + r] = value;
}

void PheromoneField::local_update(int r, int s, double rho) {
    check_unit_interval(rho, "local_update: rho");
    if (r == s) throw std::invalid_argument("local_update: r == s");
    const double updated = (1.0 - rho) * at(r, s) + rho * tau0_;
    set(r, s, updated);
}

void PheromoneField::global_update(const Tour& best, double alpha, DecayScope scope, Exec exec) {
    check_unit_interval(alpha, "global_update: alpha");
    const TourValidity verdict = validate_tour(best.order, n_);
    if (!verdict.valid) throw std::invalid_argument("global_update: " + verdict.defect);
    if (best.length <= 0) throw std::invalid_argument("global_update: tour length must be positive");

    const double deposit = 1.0 / static_cast<double>(best.length);
    if (scope == DecayScope::all_edges) {
        kernels::scale(tau_, 1.0 - alpha, exec);
        int prev = best.order.back();
        for (const int city : best.order) {
            set(prev, city, at(prev, city) + alpha * deposit);
            prev = city;
        }
    } else {
        int prev = best.order.back();
        for (const int city : best.order) {
            set(prev, city, (1.0 - alpha) * at(prev, city) + alpha * deposit);
            prev = city;
        }
    }
}

std::uint64_t PheromoneField::checksum(Exec exec) const {
    return kernels::matrix_checksum(tau_, exec);
}

}  // namespace rbacs

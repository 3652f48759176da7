#pragma once

#include <functional>
#include <string>

namespace critset {

enum class Parity { None, Odd, Even };

// Scalar activation with first and second derivatives plus the traits the
// dependence analysis needs. Traits are declared by the caller and only
// spot-checked numerically (parity cannot be decided from point samples).
struct Activation {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    Parity parity = Parity::None;
    bool zero_at_zero = false;
};

namespace activations {
Activation exp_act();
Activation tanh_act();
Activation sin_act();
Activation softplus_act();  // log(1 + e^z)
}  // namespace activations

// Resolves one of the built-in names: exp, tanh, sin, softplus.
// Throws std::invalid_argument for anything else.
Activation activation_by_name(const std::string& name);

// Spot-checks the declared traits and the derivatives on a fixed grid.
// Throws std::invalid_argument with a description of the first violation.
void validate_activation(const Activation& act,
                         double parity_tol = 1e-10,
                         double zero_tol = 1e-12,
                         double deriv_rel_tol = 1e-6);

const char* parity_name(Parity p);

}  // namespace critset

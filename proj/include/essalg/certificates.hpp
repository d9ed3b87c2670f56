#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "essalg/comm.hpp"

namespace essalg {

/// One step of a regular-sequence proof: the element's nonzero normal form
/// modulo the step ideal, and the reduced bases of the step ideal and of the
/// colon ideal (element regular exactly when the two bases coincide).
struct RegularStep {
    Polynomial element;
    Polynomial normal_form;
    std::vector<Polynomial> ideal_basis;
    std::vector<Polynomial> colon_basis;
};

/// Replayable proof that a polynomial sequence is regular on the presented
/// ring: per-step colon equalities plus a nonzero final quotient.
struct RegularSequenceCertificate {
    CommPresentation ring;
    std::vector<Polynomial> sequence;
    std::vector<RegularStep> steps;
    std::vector<Polynomial> quotient_basis;
    bool quotient_nonzero = false;

    /// Structural consistency of the recorded proof. This inspects the
    /// stored bases; it does not recompute any colon ideal.
    bool consistent() const {
        if (steps.size() != sequence.size() || sequence.empty()) return false;
        if (!quotient_nonzero) return false;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (steps[i].element != sequence[i]) return false;
            if (steps[i].normal_form.is_zero()) return false;
            if (steps[i].ideal_basis != steps[i].colon_basis) return false;
        }
        return true;
    }
};

}  // namespace essalg

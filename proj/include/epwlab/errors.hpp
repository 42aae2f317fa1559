#pragma once

#include <stdexcept>
#include <string>

namespace epwlab {

// Error taxonomy shared by every module.  Each failure mode named in an
// operation contract maps to exactly one of these types, so tests can match
// on the class instead of the message text.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct context_error : error { using error::error; };        // mixed scalar fields
struct shape_error : error { using error::error; };          // dimension mismatch
struct grading_error : error { using error::error; };        // wrong exterior degree
struct ambient_error : error { using error::error; };        // V vs V-dual mismatch
struct degenerate_input_error : error { using error::error; };
struct degeneracy_error : error { using error::error; };     // singular Gram
struct isotropy_error : error { using error::error; };
struct integrality_error : error { using error::error; };
struct precondition_error : error { using error::error; };
struct not_smooth_error : error { using error::error; };
struct not_on_hypersurface_error : error { using error::error; };
struct reduction_error : error { using error::error; };      // bad prime for a lattice/subspace
struct undefined_error : error { using error::error; };      // inverse of zero etc.
struct internal_error : error { using error::error; };       // invariant violation
struct io_error : error { using error::error; };

// Exact division failed; the witness is the canonical serialization of the
// nonzero remainder, so the caller can see *what* was left over.
struct divisibility_error : error {
    std::string remainder;
    divisibility_error(const std::string& msg, std::string rem)
        : error(msg), remainder(std::move(rem)) {}
};

}  // namespace epwlab

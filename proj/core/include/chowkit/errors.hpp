#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

// Base for all library errors. CLI maps anything derived from input_error
// (and parse failures) to exit code 2; everything else is an internal bug.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shapes don't line up: matrix products, vector lengths, generator counts.
struct dimension_error : error {
    using error::error;
};

// A homomorphism matrix does not send relations into relations, or the legs
// of a pullback square land in different groups.
struct hom_error : error {
    using error::error;
};

// Degree out of range for a graded object, including cup products that would
// land beyond the top degree.
struct degree_error : error {
    using error::error;
};

// A value fails a mathematical precondition (non-unit constant term, negative
// parameter, index outside the allowed window).
struct value_error : error {
    using error::error;
};

// Malformed user input: unparsable integers, bad JSON shapes, unknown example
// names, missing files.
struct input_error : error {
    using error::error;
};

} // namespace chowkit

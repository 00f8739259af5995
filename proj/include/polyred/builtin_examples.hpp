#pragma once

#include "polyred/dynamics.hpp"
#include "polyred/lift.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyred {

struct ExampleCheck {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct ExampleBundle {
    std::string name;
    std::string description;
    std::optional<FormFamily> forms;
    std::vector<std::pair<std::string, Subspace>> subspaces;
    std::vector<std::pair<std::string, std::string>> values;  // printable derived values
    std::vector<ExampleCheck> checks;
    bool all_passed() const;
};

std::vector<std::string> builtin_example_names();
// throws std::invalid_argument for an unknown name
ExampleBundle builtin_example(const std::string& name);

// pieces of the two-field electrostatic example, shared with tests
struct ElectrostaticData {
    MultiPoly h_corrected;  // -q t1 t2 + (p1^2 + p2^2)/2
    MultiPoly h_printed;    // +q t1 t2 + (p1^2 + p2^2)/2
    PolySection section;
    PolyKVector x;          // the k-vector tangent to the section
};
ElectrostaticData electrostatic_example();

}  // namespace polyred

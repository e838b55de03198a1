#include "gbwave/core/hamiltonian.hpp"

// All of hamiltonian.hpp is header-inline; this TU just anchors the header.

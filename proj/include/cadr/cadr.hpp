#pragma once

// Umbrella header for the cadr access-path library.

#include "cadr/classic.hpp"
#include "cadr/locator.hpp"
#include "cadr/notation.hpp"
#include "cadr/program.hpp"
#include "cadr/tree.hpp"

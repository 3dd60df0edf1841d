#pragma once

#include "hornkeys/errors.hpp"
#include "hornkeys/generators.hpp"
#include "hornkeys/horn.hpp"
#include "hornkeys/hypergraph.hpp"
#include "hornkeys/io.hpp"
#include "hornkeys/keygen.hpp"
#include "hornkeys/oracles.hpp"
#include "hornkeys/tss.hpp"
#include "hornkeys/uniqueness.hpp"
#include "hornkeys/varset.hpp"

#pragma once

#include "bmg/colored_digraph.hpp"
#include "bmg/error.hpp"
#include "bmg/generators.hpp"
#include "bmg/ilp.hpp"
#include "bmg/io.hpp"
#include "bmg/phylo_tree.hpp"
#include "bmg/recognition.hpp"
#include "bmg/rng.hpp"
#include "bmg/triples.hpp"

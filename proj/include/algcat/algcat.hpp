#pragma once

// Convenience umbrella: the whole header-only library.

#include "algcat/catalog.hpp"
#include "algcat/classify.hpp"
#include "algcat/constructions.hpp"
#include "algcat/core.hpp"
#include "algcat/hom.hpp"
#include "algcat/io.hpp"
#include "algcat/points.hpp"
#include "algcat/words.hpp"

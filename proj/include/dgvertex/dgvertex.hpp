#pragma once

#include "dgvertex/catalog.hpp"
#include "dgvertex/dglie.hpp"
#include "dgvertex/element.hpp"
#include "dgvertex/envelope.hpp"
#include "dgvertex/errors.hpp"
#include "dgvertex/grading.hpp"
#include "dgvertex/io.hpp"
#include "dgvertex/loop.hpp"
#include "dgvertex/presentation.hpp"
#include "dgvertex/rational.hpp"
#include "dgvertex/report.hpp"
#include "dgvertex/vla.hpp"

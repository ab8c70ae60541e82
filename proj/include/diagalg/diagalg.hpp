#pragma once

#include "coeff.hpp"
#include "decompose.hpp"
#include "diagram.hpp"
#include "ghostalg.hpp"
#include "labelalg.hpp"
#include "parallel.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "sympblob.hpp"
#include "text.hpp"

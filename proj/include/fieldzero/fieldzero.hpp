#pragma once

// Umbrella header for the fieldzero library.

#include "fieldzero/algebraic.hpp"
#include "fieldzero/asymptote_polys.hpp"
#include "fieldzero/bipoly.hpp"
#include "fieldzero/box.hpp"
#include "fieldzero/charge_system.hpp"
#include "fieldzero/config.hpp"
#include "fieldzero/contour.hpp"
#include "fieldzero/directions.hpp"
#include "fieldzero/field_eval.hpp"
#include "fieldzero/interval.hpp"
#include "fieldzero/moments.hpp"
#include "fieldzero/qinterval.hpp"
#include "fieldzero/rational.hpp"
#include "fieldzero/report.hpp"
#include "fieldzero/resultant.hpp"
#include "fieldzero/sign_product.hpp"
#include "fieldzero/sturm.hpp"
#include "fieldzero/unipoly.hpp"
#include "fieldzero/verification.hpp"
#include "fieldzero/zero_finder.hpp"

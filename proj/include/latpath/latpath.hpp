#pragma once

#include "appell.hpp"
#include "boundary.hpp"
#include "certifier.hpp"
#include "closed_forms.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "ogf_converter.hpp"
#include "oracle_enum.hpp"
#include "ramified_series.hpp"
#include "ring.hpp"
#include "serialization.hpp"
#include "sigma_poly.hpp"
#include "truncated_series.hpp"

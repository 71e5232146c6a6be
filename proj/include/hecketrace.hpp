#pragma once

#include "hecketrace/cartan.hpp"
#include "hecketrace/context.hpp"
#include "hecketrace/counts.hpp"
#include "hecketrace/dihedral.hpp"
#include "hecketrace/errors.hpp"
#include "hecketrace/hecke.hpp"
#include "hecketrace/hecke_expr.hpp"
#include "hecketrace/integer.hpp"
#include "hecketrace/laurent_poly.hpp"
#include "hecketrace/qpoly.hpp"
#include "hecketrace/qrational.hpp"
#include "hecketrace/rpoly.hpp"
#include "hecketrace/serialize.hpp"
#include "hecketrace/struct_const.hpp"
#include "hecketrace/trace.hpp"
#include "hecketrace/verify.hpp"
#include "hecketrace/weyl.hpp"

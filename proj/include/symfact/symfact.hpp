#ifndef SYMFACT_SYMFACT_HPP
#define SYMFACT_SYMFACT_HPP

#include "symfact/determinant.hpp"
#include "symfact/errors.hpp"
#include "symfact/json_io.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/qops_elementary.hpp"
#include "symfact/qops_monomial.hpp"
#include "symfact/qops_schur.hpp"
#include "symfact/quad_check.hpp"
#include "symfact/rational.hpp"
#include "symfact/spectral.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"
#include "symfact/verify.hpp"

#endif  // SYMFACT_SYMFACT_HPP

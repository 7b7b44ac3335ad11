#pragma once

#include "chevhopf/algebra.hpp"
#include "chevhopf/axioms.hpp"
#include "chevhopf/cyclotomic.hpp"
#include "chevhopf/errors.hpp"
#include "chevhopf/groups.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/rational.hpp"
#include "chevhopf/report.hpp"
#include "chevhopf/sparse.hpp"
#include "chevhopf/supergroup.hpp"
#include "chevhopf/twists.hpp"
#include "chevhopf/chevalley.hpp"
#include "chevhopf/triangular.hpp"
#include "chevhopf/isomorphism.hpp"
#include "chevhopf/pointed.hpp"
#include "chevhopf/json_io.hpp"

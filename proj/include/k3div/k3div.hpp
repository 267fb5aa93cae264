#pragma once

#include <k3div/numeric.hpp>
#include <k3div/lattice.hpp>
#include <k3div/normal_form.hpp>
#include <k3div/discriminant.hpp>
#include <k3div/overlattice.hpp>
#include <k3div/expression.hpp>
#include <k3div/roots.hpp>
#include <k3div/divisibility3.hpp>
#include <k3div/fibration.hpp>
#include <k3div/models.hpp>
#include <k3div/supersingular.hpp>
#include <k3div/io.hpp>
#include <k3div/report.hpp>

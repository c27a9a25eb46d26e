#pragma once

#include <anyonkit/builder.hpp>
#include <anyonkit/classify.hpp>
#include <anyonkit/cochain.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/linear_mod.hpp>
#include <anyonkit/obstruction.hpp>
#include <anyonkit/quadratic.hpp>
#include <anyonkit/qz.hpp>
#include <anyonkit/theory.hpp>

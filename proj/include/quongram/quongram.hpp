#pragma once

#include "quongram/apps/arrangement.hpp"
#include "quongram/apps/contravariant.hpp"
#include "quongram/combin/schroeder.hpp"
#include "quongram/combin/young.hpp"
#include "quongram/detkit/bruteforce.hpp"
#include "quongram/detkit/closed.hpp"
#include "quongram/detkit/posdef.hpp"
#include "quongram/fock/factor.hpp"
#include "quongram/fock/gram.hpp"
#include "quongram/fock/wordpoly.hpp"
#include "quongram/invkit/degenerate.hpp"
#include "quongram/invkit/inverse.hpp"
#include "quongram/invkit/lambda.hpp"
#include "quongram/invkit/zagier.hpp"

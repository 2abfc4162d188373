#pragma once

#include "ttk/braid.hpp"
#include "ttk/burau.hpp"
#include "ttk/classify.hpp"
#include "ttk/error.hpp"
#include "ttk/horadam.hpp"
#include "ttk/invariants.hpp"
#include "ttk/kauffman.hpp"
#include "ttk/knots.hpp"
#include "ttk/laurent.hpp"
#include "ttk/modular.hpp"
#include "ttk/temperley_lieb.hpp"

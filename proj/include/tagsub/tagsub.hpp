#pragma once

#include "tagsub/derivation.hpp"
#include "tagsub/dispatch.hpp"
#include "tagsub/error.hpp"
#include "tagsub/hierarchy.hpp"
#include "tagsub/normalize.hpp"
#include "tagsub/reductive.hpp"
#include "tagsub/semantics.hpp"
#include "tagsub/syntax.hpp"
#include "tagsub/type.hpp"

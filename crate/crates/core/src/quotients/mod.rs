//! Linear quotients: checking, searching and the explicit orders on powers
//! of cover ideals.

mod certificate;
mod cover_order;
mod search;

pub use certificate::{
    check_linear_quotients_order, CertificateJson, LinearQuotientsCertificate, OrderCheck, StepJson,
};
pub use cover_order::{
    c5_cover_power_order, check_products_minimal, cover_sets, expressions_of_cover_power_gen,
    cover_power_order, CoverPowerExpression, ProductsMinimal, C5_COVERS,
};
pub use search::{
    exhaustive_linear_quotients, find_linear_quotients, greedy_linear_quotients,
    greedy_linear_quotients_from, SearchOutcome, EXHAUSTIVE_MAX_GENERATORS,
};

pub mod axbuilder;
pub mod brace;
pub mod canonical;
pub mod covering;
pub mod cycleset;
pub mod enumeration;
pub mod frobenius;
pub mod json;
pub mod perm;
pub mod permgroup;
pub mod solution;

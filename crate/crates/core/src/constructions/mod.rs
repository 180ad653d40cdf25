pub mod base;
pub mod field;
pub mod product;

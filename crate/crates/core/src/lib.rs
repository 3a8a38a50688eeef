pub mod alexoracle;
pub mod corpus;
pub mod cyclo;
pub mod frcomplex;
pub mod gradings;
pub mod laurent;
pub mod linalg;
pub mod linkdiag;
pub mod skein;
pub mod verify;

pub mod ast;
pub mod oracle;

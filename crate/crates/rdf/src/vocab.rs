//! Namespace constants for the vocabularies the toolkit touches.

macro_rules! ns {
    ($modname:ident, $base:literal, { $($name:ident = $local:literal),* $(,)? }) => {
        pub mod $modname {
            pub const NS: &str = $base;
            $(pub const $name: &str = concat!($base, $local);)*
        }
    };
}

ns!(rdf, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", {
    TYPE = "type",
    FIRST = "first",
    REST = "rest",
    NIL = "nil",
    PROPERTY = "Property",
    LANG_STRING = "langString",
    HTML = "HTML",
    XML_LITERAL = "XMLLiteral",
    STATEMENT = "Statement",
    LIST = "List",
    SEQ = "Seq",
    BAG = "Bag",
    ALT = "Alt",
});

ns!(rdfs, "http://www.w3.org/2000/01/rdf-schema#", {
    CLASS = "Class",
    RESOURCE = "Resource",
    LITERAL = "Literal",
    DATATYPE = "Datatype",
    LABEL = "label",
    COMMENT = "comment",
    DOMAIN = "domain",
    RANGE = "range",
    SUB_CLASS_OF = "subClassOf",
    SUB_PROPERTY_OF = "subPropertyOf",
    SEE_ALSO = "seeAlso",
    IS_DEFINED_BY = "isDefinedBy",
});

ns!(owl, "http://www.w3.org/2002/07/owl#", {
    CLASS = "Class",
    THING = "Thing",
    NAMED_INDIVIDUAL = "NamedIndividual",
    OBJECT_PROPERTY = "ObjectProperty",
    DATATYPE_PROPERTY = "DatatypeProperty",
    ANNOTATION_PROPERTY = "AnnotationProperty",
    FUNCTIONAL_PROPERTY = "FunctionalProperty",
    INVERSE_FUNCTIONAL_PROPERTY = "InverseFunctionalProperty",
    IRREFLEXIVE_PROPERTY = "IrreflexiveProperty",
    ASYMMETRIC_PROPERTY = "AsymmetricProperty",
    DISJOINT_WITH = "disjointWith",
    PROPERTY_DISJOINT_WITH = "propertyDisjointWith",
    DEPRECATED = "deprecated",
    DEPRECATED_CLASS = "DeprecatedClass",
    DEPRECATED_PROPERTY = "DeprecatedProperty",
    SAME_AS = "sameAs",
    EQUIVALENT_CLASS = "equivalentClass",
    EQUIVALENT_PROPERTY = "equivalentProperty",
    INVERSE_OF = "inverseOf",
    ONTOLOGY = "Ontology",
    TRANSITIVE_PROPERTY = "TransitiveProperty",
    SYMMETRIC_PROPERTY = "SymmetricProperty",
    REFLEXIVE_PROPERTY = "ReflexiveProperty",
    ONTOLOGY_PROPERTY = "OntologyProperty",
});

ns!(xsd, "http://www.w3.org/2001/XMLSchema#", {
    STRING = "string",
    BOOLEAN = "boolean",
    DECIMAL = "decimal",
    INTEGER = "integer",
    INT = "int",
    LONG = "long",
    SHORT = "short",
    BYTE = "byte",
    NON_NEGATIVE_INTEGER = "nonNegativeInteger",
    NON_POSITIVE_INTEGER = "nonPositiveInteger",
    POSITIVE_INTEGER = "positiveInteger",
    NEGATIVE_INTEGER = "negativeInteger",
    UNSIGNED_LONG = "unsignedLong",
    UNSIGNED_INT = "unsignedInt",
    UNSIGNED_SHORT = "unsignedShort",
    UNSIGNED_BYTE = "unsignedByte",
    DOUBLE = "double",
    FLOAT = "float",
    DATE = "date",
    DATE_TIME = "dateTime",
    DATE_TIME_STAMP = "dateTimeStamp",
    TIME = "time",
    G_YEAR = "gYear",
    G_YEAR_MONTH = "gYearMonth",
    ANY_URI = "anyURI",
    LANGUAGE = "language",
    NORMALIZED_STRING = "normalizedString",
    TOKEN = "token",
    DURATION = "duration",
});

ns!(sh, "http://www.w3.org/ns/shacl#", {
    NODE_SHAPE = "NodeShape",
    PROPERTY_SHAPE = "PropertyShape",
    SHAPE = "Shape",
    TARGET_CLASS = "targetClass",
    TARGET_NODE = "targetNode",
    TARGET_SUBJECTS_OF = "targetSubjectsOf",
    TARGET_OBJECTS_OF = "targetObjectsOf",
    PATH = "path",
    INVERSE_PATH = "inversePath",
    ALTERNATIVE_PATH = "alternativePath",
    ZERO_OR_MORE_PATH = "zeroOrMorePath",
    ONE_OR_MORE_PATH = "oneOrMorePath",
    ZERO_OR_ONE_PATH = "zeroOrOnePath",
    PROPERTY = "property",
    NODE = "node",
    NOT = "not",
    AND = "and",
    OR = "or",
    XONE = "xone",
    CLASS = "class",
    DATATYPE = "datatype",
    NODE_KIND = "nodeKind",
    MIN_COUNT = "minCount",
    MAX_COUNT = "maxCount",
    MIN_INCLUSIVE = "minInclusive",
    MAX_INCLUSIVE = "maxInclusive",
    MIN_EXCLUSIVE = "minExclusive",
    MAX_EXCLUSIVE = "maxExclusive",
    MIN_LENGTH = "minLength",
    MAX_LENGTH = "maxLength",
    PATTERN = "pattern",
    FLAGS = "flags",
    LANGUAGE_IN = "languageIn",
    UNIQUE_LANG = "uniqueLang",
    EQUALS = "equals",
    DISJOINT = "disjoint",
    LESS_THAN = "lessThan",
    LESS_THAN_OR_EQUALS = "lessThanOrEquals",
    HAS_VALUE = "hasValue",
    IN = "in",
    CLOSED = "closed",
    IGNORED_PROPERTIES = "ignoredProperties",
    QUALIFIED_VALUE_SHAPE = "qualifiedValueShape",
    QUALIFIED_MIN_COUNT = "qualifiedMinCount",
    QUALIFIED_MAX_COUNT = "qualifiedMaxCount",
    QUALIFIED_VALUE_SHAPES_DISJOINT = "qualifiedValueShapesDisjoint",
    DEACTIVATED = "deactivated",
    SEVERITY = "severity",
    MESSAGE = "message",
    NAME = "name",
    DESCRIPTION = "description",
    SPARQL = "sparql",
    IRI = "IRI",
    BLANK_NODE = "BlankNode",
    LITERAL = "Literal",
    BLANK_NODE_OR_IRI = "BlankNodeOrIRI",
    BLANK_NODE_OR_LITERAL = "BlankNodeOrLiteral",
    IRI_OR_LITERAL = "IRIOrLiteral",
    VIOLATION = "Violation",
    WARNING = "Warning",
    INFO = "Info",
    VALIDATION_REPORT = "ValidationReport",
    VALIDATION_RESULT = "ValidationResult",
    CONFORMS = "conforms",
    RESULT = "result",
    FOCUS_NODE = "focusNode",
    RESULT_PATH = "resultPath",
    VALUE = "value",
    SOURCE_SHAPE = "sourceShape",
    SOURCE_CONSTRAINT_COMPONENT = "sourceConstraintComponent",
    RESULT_SEVERITY = "resultSeverity",
    RESULT_MESSAGE = "resultMessage",
    MIN_COUNT_COMPONENT = "MinCountConstraintComponent",
    MAX_COUNT_COMPONENT = "MaxCountConstraintComponent",
    CLASS_COMPONENT = "ClassConstraintComponent",
    DATATYPE_COMPONENT = "DatatypeConstraintComponent",
    NODE_KIND_COMPONENT = "NodeKindConstraintComponent",
    HAS_VALUE_COMPONENT = "HasValueConstraintComponent",
    IN_COMPONENT = "InConstraintComponent",
    PATTERN_COMPONENT = "PatternConstraintComponent",
    MIN_INCLUSIVE_COMPONENT = "MinInclusiveConstraintComponent",
    MAX_INCLUSIVE_COMPONENT = "MaxInclusiveConstraintComponent",
    MIN_EXCLUSIVE_COMPONENT = "MinExclusiveConstraintComponent",
    MAX_EXCLUSIVE_COMPONENT = "MaxExclusiveConstraintComponent",
    MIN_LENGTH_COMPONENT = "MinLengthConstraintComponent",
    MAX_LENGTH_COMPONENT = "MaxLengthConstraintComponent",
    LANGUAGE_IN_COMPONENT = "LanguageInConstraintComponent",
    UNIQUE_LANG_COMPONENT = "UniqueLangConstraintComponent",
    EQUALS_COMPONENT = "EqualsConstraintComponent",
    DISJOINT_COMPONENT = "DisjointConstraintComponent",
    NOT_COMPONENT = "NotConstraintComponent",
    AND_COMPONENT = "AndConstraintComponent",
    OR_COMPONENT = "OrConstraintComponent",
    NODE_COMPONENT = "NodeConstraintComponent",
    QUALIFIED_MIN_COUNT_COMPONENT = "QualifiedMinCountConstraintComponent",
    QUALIFIED_MAX_COUNT_COMPONENT = "QualifiedMaxCountConstraintComponent",
});

ns!(void, "http://rdfs.org/ns/void#", {
    DATASET = "Dataset",
    URI_SPACE = "uriSpace",
    URI_REGEX_PATTERN = "uriRegexPattern",
    SPARQL_ENDPOINT = "sparqlEndpoint",
    DATA_DUMP = "dataDump",
    VOCABULARY = "vocabulary",
    EXAMPLE_RESOURCE = "exampleResource",
    TRIPLES = "triples",
    ENTITIES = "entities",
    FEATURE = "feature",
});

ns!(dcat, "http://www.w3.org/ns/dcat#", {
    DATASET = "Dataset",
    DISTRIBUTION = "Distribution",
    LANDING_PAGE = "landingPage",
    ACCESS_URL = "accessURL",
    DOWNLOAD_URL = "downloadURL",
    MEDIA_TYPE = "mediaType",
    DISTRIBUTION_PROP = "distribution",
    KEYWORD = "keyword",
    CONTACT_POINT = "contactPoint",
});

ns!(dcterms, "http://purl.org/dc/terms/", {
    LICENSE = "license",
    TITLE = "title",
    DESCRIPTION = "description",
    CREATOR = "creator",
    PUBLISHER = "publisher",
    CREATED = "created",
    MODIFIED = "modified",
    ISSUED = "issued",
    SOURCE = "source",
    CONFORMS_TO = "conformsTo",
    FORMAT = "format",
    RIGHTS = "rights",
    CONTRIBUTOR = "contributor",
    PROVENANCE = "provenance",
    PROVIDER = "provider",
    DATE = "date",
    LICENSE_DOCUMENT = "LicenseDocument",
});

ns!(foaf, "http://xmlns.com/foaf/0.1/", {
    HOMEPAGE = "homepage",
    NAME = "name",
    MBOX = "mbox",
    PAGE = "page",
    DOCUMENT = "Document",
    PERSON = "Person",
    GIVEN_NAME = "givenName",
    FAMILY_NAME = "familyName",
});

ns!(prov, "http://www.w3.org/ns/prov#", {
    WAS_DERIVED_FROM = "wasDerivedFrom",
    WAS_GENERATED_BY = "wasGeneratedBy",
    WAS_ATTRIBUTED_TO = "wasAttributedTo",
});

ns!(skos, "http://www.w3.org/2004/02/skos/core#", {
    PREF_LABEL = "prefLabel",
    ALT_LABEL = "altLabel",
    DEFINITION = "definition",
    EXACT_MATCH = "exactMatch",
});

ns!(schema, "http://schema.org/", {
    NAME = "name",
    DESCRIPTION = "description",
    LICENSE = "license",
});

ns!(sec, "https://w3id.org/security#", {
    SIGNATURE = "signature",
    PROOF = "proof",
    DATA_INTEGRITY_PROOF = "DataIntegrityProof",
    PROOF_PURPOSE = "proofPurpose",
    CRYPTOSUITE = "cryptosuite",
    CRYPTOSUITE_STRING = "cryptosuiteString",
    PROOF_VALUE = "proofValue",
    ASSERTION_METHOD = "assertionMethod",
    AUTHENTICATION = "authentication",
    KEY_AGREEMENT = "keyAgreement",
    CAPABILITY_INVOCATION = "capabilityInvocation",
    CAPABILITY_DELEGATION = "capabilityDelegation",
});

/// Common prefixes used when writing Turtle.
pub const STANDARD_PREFIXES: &[(&str, &str)] = &[
    ("rdf", rdf::NS),
    ("rdfs", rdfs::NS),
    ("owl", owl::NS),
    ("xsd", xsd::NS),
    ("sh", sh::NS),
    ("void", void::NS),
    ("dcat", dcat::NS),
    ("dcterms", dcterms::NS),
    ("foaf", foaf::NS),
    ("prov", prov::NS),
];

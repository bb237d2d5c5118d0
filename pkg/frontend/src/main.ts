import { bootstrap } from './app';

bootstrap(document);
